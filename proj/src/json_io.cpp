#include "brmt/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace brmt {

Json rational_to_json(const Rational& v) { return to_fraction_string(v); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_array() && j.size() == 2)
        return Rational(BigInt(j[0].get<long long>()), BigInt(j[1].get<long long>()));
    throw std::invalid_argument("expected a rational as integer, \"p/q\" or [num, den]");
}

Json partition_to_json(const IntervalPartition& p) { return Json(p.endpoints()); }

IntervalPartition partition_from_json(const Json& j) {
    return IntervalPartition(j.get<std::vector<int>>());
}

namespace {

std::vector<Rational> rational_list(const Json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

}  // namespace

BDiagonalLaw law_from_json(const Json& j) {
    const int max_order = j.value("max_order", 64);
    return BDiagonalLaw(rational_list(j.at("alpha")), rational_list(j.at("beta")), max_order);
}

Json law_to_json(const BDiagonalLaw& law) {
    Json alpha = Json::array(), beta = Json::array();
    for (const auto& v : law.alpha_sequence()) alpha.push_back(rational_to_json(v));
    for (const auto& v : law.beta_sequence()) beta.push_back(rational_to_json(v));
    return Json{{"alpha", alpha}, {"beta", beta}, {"max_order", law.max_order()}};
}

EntryModel entry_model_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bdiag_family")
        return EntryModel::bdiag_family(rational_list(j.at("a")), rational_list(j.at("b")));
    if (kind == "selfadjoint_family")
        return EntryModel::selfadjoint_family(rational_from_json(j.at("alpha")),
                                              rational_from_json(j.at("beta")));
    if (kind == "general") {
        std::map<std::vector<Sign>, Rational> table;
        for (const auto& row : j.at("moments")) {
            const SignPattern pat = SignPattern::parse(row.at(0).get<std::string>());
            const Rational num = rational_from_json(row.at(1));
            const Rational den = row.size() > 2 ? rational_from_json(row.at(2)) : Rational(1);
            if (den == 0) throw std::invalid_argument("entry model: zero denominator");
            table[pat.signs()] = num / den;
        }
        return EntryModel::general(std::move(table));
    }
    throw std::invalid_argument("unknown entry model kind \"" + kind + "\"");
}

MomentFunctional moment_functional_from_json(const Json& j) {
    Alphabet ab;
    for (const auto& name : j.at("alphabet")) {
        int tag = 0;
        if (j.contains("tags") && j["tags"].contains(name.get<std::string>()))
            tag = j["tags"][name.get<std::string>()].get<int>();
        ab.add_symbol(name.get<std::string>(), tag);
    }
    if (j.contains("involution")) {
        for (const auto& pair : j["involution"]) {
            const int a = ab.find(pair.at(0).get<std::string>());
            const int b = ab.find(pair.at(1).get<std::string>());
            if (a < 0 || b < 0)
                throw std::invalid_argument("involution names a symbol not in the alphabet");
            ab.set_adjoint_pair(a, b);
        }
    }
    MomentFunctional m(ab, j.value("max_order", 8));
    for (const auto& row : j.at("moments")) {
        Word w;
        for (const auto& name : row.at(0)) {
            const int id = m.alphabet().find(name.get<std::string>());
            if (id < 0)
                throw std::invalid_argument("moment word uses unknown symbol \"" +
                                            name.get<std::string>() + "\"");
            w.push_back(id);
        }
        const Rational num = rational_from_json(row.at(1));
        const Rational den = row.size() > 2 ? rational_from_json(row.at(2)) : Rational(1);
        if (den == 0) throw std::invalid_argument("moment table: zero denominator");
        m.set_value(w, num / den);
    }
    return m;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace brmt
