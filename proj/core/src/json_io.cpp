#include "hopfcorr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hopfcorr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json scalar_to_json(const Rat& x) {
    std::string s = x.str();
    if (s.find('/') == std::string::npos && s.size() <= 18) return std::stoll(s);
    return s;
}
ordered_json scalar_to_json(const Fp& x) { return x.residue(); }

template <class K>
K scalar_from_json(const json& j, const FieldDesc& field) {
    if (j.is_number_integer()) return field_of<K>::from_long(j.get<long>(), field);
    if (j.is_string()) return field_of<K>::parse(j.get<std::string>(), field);
    throw hc_error("json: scalar must be an integer or a string");
}

template <class K>
ordered_json algebra_to_json(const HopfAlgebra<K>& h) {
    ordered_json j;
    j["dim"] = h.dim;
    j["field"] = h.field.tag();
    j["labels"] = h.labels;
    ordered_json mult = ordered_json::array(), comult = ordered_json::array();
    for (int i = 0; i < h.dim; ++i) {
        ordered_json mi = ordered_json::array(), ci = ordered_json::array();
        for (int a = 0; a < h.dim; ++a) {
            ordered_json mrow = ordered_json::array(), crow = ordered_json::array();
            for (int b = 0; b < h.dim; ++b) {
                mrow.push_back(scalar_to_json(h.mult.at(i, a, b)));
                crow.push_back(scalar_to_json(h.comult.at(i, a, b)));
            }
            mi.push_back(mrow);
            ci.push_back(crow);
        }
        mult.push_back(mi);
        comult.push_back(ci);
    }
    j["mult"] = mult;
    j["comult"] = comult;
    ordered_json unit = ordered_json::array(), counit = ordered_json::array();
    for (int i = 0; i < h.dim; ++i) {
        unit.push_back(scalar_to_json(h.unit[i]));
        counit.push_back(scalar_to_json(h.counit[i]));
    }
    j["unit"] = unit;
    j["counit"] = counit;
    ordered_json s = ordered_json::array();
    for (int i = 0; i < h.dim; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < h.dim; ++k) row.push_back(scalar_to_json(h.antipode.at(i, k)));
        s.push_back(row);
    }
    j["antipode"] = s;
    return j;
}

template <class K>
HopfAlgebra<K> algebra_from_json(const json& j, const FieldDesc& field) {
    int dim = j.at("dim").get<int>();
    if (dim < 1) throw hc_error("json: dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.empty())
        for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    if (int(labels.size()) != dim) throw hc_error("json: labels length mismatch");

    auto cubic = [&](const json& t) {
        if (int(t.size()) != dim) throw hc_error("json: rank-3 table has wrong shape");
        Cubic<K> c(dim, dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (int(t[i].size()) != dim) throw hc_error("json: rank-3 table has wrong shape");
            for (int a = 0; a < dim; ++a) {
                if (int(t[i][a].size()) != dim)
                    throw hc_error("json: rank-3 table has wrong shape");
                for (int b = 0; b < dim; ++b)
                    c.at(i, a, b) = scalar_from_json<K>(t[i][a][b], field);
            }
        }
        return c;
    };
    auto vec = [&](const json& t) {
        if (int(t.size()) != dim) throw hc_error("json: vector has wrong length");
        Vec<K> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = scalar_from_json<K>(t[i], field);
        return v;
    };
    Matrix<K> antipode(dim, dim);
    const json& s = j.at("antipode");
    if (int(s.size()) != dim) throw hc_error("json: antipode has wrong shape");
    for (int i = 0; i < dim; ++i) {
        if (int(s[i].size()) != dim) throw hc_error("json: antipode has wrong shape");
        for (int k = 0; k < dim; ++k) antipode.at(i, k) = scalar_from_json<K>(s[i][k], field);
    }
    return make_hopf_algebra<K>(dim, field, std::move(labels), cubic(j.at("mult")),
                                vec(j.at("unit")), cubic(j.at("comult")), vec(j.at("counit")),
                                std::move(antipode));
}

}  // namespace

ordered_json hopf_to_json(const AnyHopf& h) {
    return std::visit([](const auto& a) { return algebra_to_json(a); }, h);
}

AnyHopf hopf_from_json(const json& j) {
    FieldDesc field = FieldDesc::parse(j.at("field").get<std::string>());
    if (field.is_rational()) return AnyHopf(algebra_from_json<Rat>(j, field));
    return AnyHopf(algebra_from_json<Fp>(j, field));
}

std::string save_algebra(const AnyHopf& h) { return hopf_to_json(h).dump(1); }

AnyHopf load_algebra(const std::string& text) {
    json j = json::parse(text);
    return hopf_from_json(j);
}

AnyHopf load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hc_error("cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_algebra(buf.str());
}

void save_algebra_file(const AnyHopf& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw hc_error("cannot write file: " + path);
    out << save_algebra(h) << "\n";
}

AlgebraSpec algebra_spec_from_json(const json& j) {
    AlgebraSpec spec;
    std::string family = j.at("family").get<std::string>();
    if (family == "group_algebra")
        spec.family = AlgebraSpec::Family::group_algebra;
    else if (family == "dual_group_algebra")
        spec.family = AlgebraSpec::Family::dual_group_algebra;
    else if (family == "sweedler4")
        spec.family = AlgebraSpec::Family::sweedler4;
    else if (family == "taft")
        spec.family = AlgebraSpec::Family::taft;
    else
        throw hc_error("unknown algebra family: " + family);
    spec.field = FieldDesc::parse(j.value("field", std::string("Q")));
    if (j.contains("cyclic")) spec.cyclic_orders = j.at("cyclic").get<std::vector<int>>();
    if (j.contains("n")) spec.taft_n = j.at("n").get<int>();
    if (j.contains("q")) spec.taft_q = j.at("q").get<long>();
    return spec;
}

AnyHopf build_any(const AlgebraSpec& spec) {
    if (spec.field.is_rational()) return AnyHopf(build<Rat>(spec));
    return AnyHopf(build<Fp>(spec));
}

FieldDesc field_of_any(const AnyHopf& h) {
    return std::visit([](const auto& a) { return a.field; }, h);
}

int dim_of_any(const AnyHopf& h) {
    return std::visit([](const auto& a) { return a.dim; }, h);
}

std::string AlgebraSpec::name() const {
    switch (family) {
        case Family::group_algebra:
        case Family::dual_group_algebra: {
            std::string g;
            for (size_t i = 0; i < cyclic_orders.size(); ++i)
                g += (i ? "x" : "") + std::string("C") + std::to_string(cyclic_orders[i]);
            std::string base = "k[" + g + "]";
            if (family == Family::dual_group_algebra) base += "*";
            return base + "/" + field.tag();
        }
        case Family::sweedler4:
            return "H4/" + field.tag();
        case Family::taft:
            return "Taft(" + std::to_string(taft_n) + ",q=" + std::to_string(taft_q) + ")/" +
                   field.tag();
    }
    return "?";
}

}  // namespace hopfcorr
