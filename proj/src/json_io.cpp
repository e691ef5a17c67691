#include "barcode/json_io.hpp"

#include "barcode/errors.hpp"
#include "barcode/text.hpp"

namespace barcode {

using nlohmann::json;

namespace {

json term_to_json(const Term& t) {
    return json(t.exponents());
}

Term term_from_json(const json& j, int vars) {
    if (!j.is_array()) throw ParseError("term must be an array of exponents");
    Exponents e = j.get<Exponents>();
    if (static_cast<int>(e.size()) != vars)
        throw ParseError("term has " + std::to_string(e.size()) + " exponents, expected " +
                         std::to_string(vars));
    return Term(std::move(e));
}

json vars_to_json(const std::vector<int>& vs) {
    json arr = json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

}  // namespace

json to_json(const TermSet& M) {
    json terms = json::array();
    for (const Term& t : M.terms()) terms.push_back(term_to_json(t));
    return json{{"vars", M.vars()}, {"terms", std::move(terms)}};
}

json to_json(const VariableOrdering& ord) {
    return json{{"rank_to_var", vars_to_json(ord.rank_to_var())}};
}

json to_json(const CompletenessReport& rep) {
    json witnesses = json::array();
    for (const CompletenessWitness& w : rep.witnesses) {
        json entry{{"term", term_to_json(w.term)},
                   {"var", w.var + 1},
                   {"divisor", w.divisor ? term_to_json(*w.divisor) : json(nullptr)}};
        witnesses.push_back(std::move(entry));
    }
    json out{{"complete", rep.complete}, {"witnesses", std::move(witnesses)}};
    if (rep.first_failure)
        out["first_failure"] =
            json{{"term", term_to_json(rep.first_failure->first)},
                 {"var", rep.first_failure->second + 1}};
    else
        out["first_failure"] = nullptr;
    return out;
}

json to_json(const JanetDecomposition& dec) {
    json entries = json::array();
    for (size_t i = 0; i < dec.terms.size(); ++i)
        entries.push_back(json{{"term", term_to_json(dec.terms[i])},
                               {"mult", vars_to_json(dec.mult[i])},
                               {"nonmult", vars_to_json(dec.nonmult[i])}});
    return json{{"ordering", to_json(dec.ord)}, {"entries", std::move(entries)}};
}

json to_json(const BarCode& b) {
    const StarMarking marks = star_marking(b);
    json rows = json::array();
    for (int r = 0; r < b.vars(); ++r) {
        json bars = json::array();
        const auto& row = b.row(r);
        for (size_t j = 0; j < row.size(); ++j)
            bars.push_back(json{{"start", row[j].start},
                                {"end", row[j].end},
                                {"degree", row[j].degree},
                                {"starred", marks.contains(r, static_cast<int>(j))}});
        rows.push_back(json{{"var", b.ordering().var_at_rank(r) + 1}, {"bars", std::move(bars)}});
    }
    json labels = json::array();
    for (const Term& t : b.column_terms()) labels.push_back(to_string(t));
    return json{{"vars", b.vars()},
                {"columns", b.columns()},
                {"ordering", to_json(b.ordering())},
                {"labels", std::move(labels)},
                {"rows", std::move(rows)}};
}

json to_json(const SearchResult& res) {
    json trace = json::array();
    for (const TraceEvent& e : res.trace) {
        const char* kind = "";
        switch (e.kind) {
            case TraceEvent::Kind::choose: kind = "choose"; break;
            case TraceEvent::Kind::friends_failed: kind = "friends_failed"; break;
            case TraceEvent::Kind::revoked: kind = "revoked"; break;
            case TraceEvent::Kind::no_candidates: kind = "no_candidates"; break;
            case TraceEvent::Kind::unitary: kind = "unitary"; break;
            case TraceEvent::Kind::success: kind = "success"; break;
        }
        json entry{{"event", kind}};
        if (e.var >= 0) entry["var"] = e.var + 1;
        trace.push_back(std::move(entry));
    }
    return json{{"ordering", res.ordering ? to_json(*res.ordering) : json(nullptr)},
                {"trace", std::move(trace)}};
}

TermSet term_set_from_json(const json& j) {
    try {
        const int vars = j.at("vars").get<int>();
        std::vector<Term> terms;
        for (const json& t : j.at("terms")) terms.push_back(term_from_json(t, vars));
        return TermSet(vars, std::move(terms));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad term set JSON: ") + e.what());
    } catch (const Error&) {
        throw;
    }
}

VariableOrdering ordering_from_json(const json& j) {
    try {
        std::vector<int> ranks;
        for (const json& v : j.at("rank_to_var")) ranks.push_back(v.get<int>() - 1);
        return VariableOrdering::from_rank_list(std::move(ranks));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ordering JSON: ") + e.what());
    }
}

CompletenessReport report_from_json(const json& j, int vars) {
    try {
        CompletenessReport rep;
        rep.complete = j.at("complete").get<bool>();
        for (const json& w : j.at("witnesses")) {
            CompletenessWitness cw;
            cw.term = term_from_json(w.at("term"), vars);
            cw.var = w.at("var").get<int>() - 1;
            if (!w.at("divisor").is_null()) cw.divisor = term_from_json(w.at("divisor"), vars);
            rep.witnesses.push_back(std::move(cw));
        }
        if (!j.at("first_failure").is_null())
            rep.first_failure = {term_from_json(j.at("first_failure").at("term"), vars),
                                 j.at("first_failure").at("var").get<int>() - 1};
        return rep;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad report JSON: ") + e.what());
    }
}

}  // namespace barcode
