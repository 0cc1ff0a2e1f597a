// Suite driver: implementation to come.
