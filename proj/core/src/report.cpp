#include "fcart/report.hpp"

namespace fcart {

const char* fjn_side_name(FjnSide side) {
    switch (side) {
        case FjnSide::left: return "left";
        case FjnSide::right: return "right";
        case FjnSide::both: return "both";
    }
    return "unknown";
}

json to_json(const Ideal& I) {
    json arr = json::array();
    for (const auto& g : I.reduced_gb()) arr.push_back(g.str());
    return arr;
}

json to_json(const NuLevelSet& s) {
    return json{{"level", s.level}, {"qm", s.qm}, {"members", s.members}};
}

json to_json(const NuTree& t) {
    json levels = json::array();
    for (const auto& s : t.levels) levels.push_back(to_json(s));
    json branches = json::array();
    for (const auto& b : t.branches) {
        branches.push_back(json{
            {"members", b.members}, {"digits", b.digits}, {"dead_end", b.dead}});
    }
    return json{{"max_level", t.max_level}, {"q", t.q}, {"levels", levels},
                {"branches", branches}};
}

json to_json(const BsrCertificate& c) {
    json j{{"digits", c.digit_prefix},
           {"status", c.status == CertStatus::certified_rational ? "certified_rational"
                                                                 : "uncertified_prefix"},
           {"dead_end", c.dead_end},
           {"max_level", c.max_level}};
    if (c.status == CertStatus::certified_rational) {
        j["value"] = c.value->str();
        j["period"] = c.period;
        j["preperiod_level"] = c.preperiod_level;
        j["verified_levels"] = c.verified_levels;
        std::vector<std::int64_t> pre(c.digit_prefix.begin(),
                                      c.digit_prefix.begin() + (c.preperiod_level - 1));
        std::vector<std::int64_t> per(
            c.digit_prefix.begin() + (c.preperiod_level - 1),
            c.digit_prefix.begin() + (c.preperiod_level - 1) + c.period);
        j["block"] = json{{"preperiod", pre}, {"period", per}};
    }
    return j;
}

json to_json(const StabilizationRecord& r) {
    json chain = json::array();
    for (const auto& I : r.chain) chain.push_back(to_json(I));
    json j{{"stable_ideal", to_json(r.stable_ideal)},
           {"stable_level", r.stable_level},
           {"chain", chain}};
    if (r.containment_exponent > 0) j["containment_exponent"] = r.containment_exponent;
    return j;
}

json to_json(const DsideReport& r) {
    return json{{"level", r.level},
                {"agree", r.agree},
                {"nu_members", r.nu_members},
                {"dside_members", r.dside_members}};
}

json to_json(const TestIdealRecord& r) {
    return json{{"t", r.t.str()}, {"ideal", to_json(r.ideal)},
                {"witness_level", r.witness_level}};
}

json to_json(const FjnReport& r) {
    json exps = json::array();
    for (const auto& e : r.exponents) {
        json je{{"t", e.t.str()}, {"side", fjn_side_name(e.side)},
                {"certified", e.certified}};
        if (e.period > 0) je["period"] = e.period;
        exps.push_back(je);
    }
    json unresolved = json::array();
    for (const auto& iv : r.unresolved) {
        unresolved.push_back(json{{"lo", iv.lo.str()},
                                  {"hi", iv.hi.str()},
                                  {"unresolved_right", iv.unresolved_right}});
    }
    return json{{"level", r.level}, {"exponents", exps}, {"unresolved", unresolved}};
}

json to_json(const CrosscheckReport& r) {
    json bsr = json::array();
    for (const auto& v : r.bsr_values) bsr.push_back(v.str());
    json left = json::array();
    for (const auto& t : r.fjn_left) left.push_back(t.str());
    json right = json::array();
    for (const auto& t : r.fjn_right) right.push_back(t.str());
    return json{{"agree", r.agree},       {"zero_root", r.zero_root},
                {"bsr", bsr},             {"fjn_left", left},
                {"fjn_right", right},     {"mismatches", r.mismatches}};
}

json to_json(const ProbeReport& r) {
    return json{{"max_level", r.max_level},
                {"counts", r.counts},
                {"max", r.max},
                {"level_stable", r.level_stable}};
}

json to_json(const oracle::OracleReport& r) {
    return json{{"task", r.task},
                {"kind", oracle::oracle_kind_name(r.kind)},
                {"main", r.main_result},
                {"oracle", r.oracle_result},
                {"agree", r.agree}};
}

} // namespace fcart
