#include "lrc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lrc {

namespace {

json indices_1based(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

std::vector<int> indices_0based(const json& a) {
    std::vector<int> v;
    for (const auto& x : a) {
        int i = x.get<int>();
        if (i < 1) throw std::invalid_argument("symbol indices are 1-based");
        v.push_back(i - 1);
    }
    return v;
}

json nested_1based(const std::vector<std::vector<int>>& vv) {
    json a = json::array();
    for (const auto& v : vv) a.push_back(indices_1based(v));
    return a;
}

std::vector<std::vector<int>> nested_0based(const json& a) {
    std::vector<std::vector<int>> vv;
    for (const auto& v : a) vv.push_back(indices_0based(v));
    return vv;
}

}  // namespace

json field_to_json(const FieldSpec& spec) {
    return json{{"p", spec.p}, {"m", spec.m}, {"poly", spec.poly}};
}

FieldSpec field_from_json(const json& j) {
    FieldSpec spec;
    spec.p = j.at("p").get<uint32_t>();
    spec.m = j.at("m").get<uint32_t>();
    spec.poly = j.at("poly").get<std::vector<uint32_t>>();
    return spec;
}

json membership_to_json(const MembershipMatrix& R) {
    json classes = json::array();
    for (const auto& cls : R.classes) classes.push_back(nested_1based(cls));
    return json{{"k", R.k}, {"r", R.r}, {"t", R.t}, {"classes", classes}};
}

MembershipMatrix membership_from_json(const json& j) {
    MembershipMatrix R;
    R.k = j.at("k").get<int>();
    R.r = j.at("r").get<int>();
    R.t = j.at("t").get<int>();
    for (const auto& cls : j.at("classes")) R.classes.push_back(nested_0based(cls));
    return R;
}

json design_to_json(const ResolvableDesign& d) {
    json classes = json::array();
    for (const auto& cls : d.classes) classes.push_back(nested_1based(cls));
    return json{{"k", d.k}, {"b", d.b},      {"t", d.c},
                {"r", d.r}, {"lambda", d.lambda}, {"classes", classes}};
}

ResolvableDesign design_from_json(const json& j) {
    ResolvableDesign d;
    d.k = j.at("k").get<int>();
    d.b = j.at("b").get<int>();
    d.c = j.at("t").get<int>();
    d.r = j.at("r").get<int>();
    d.lambda = j.at("lambda").get<int>();
    for (const auto& cls : j.at("classes")) d.classes.push_back(nested_0based(cls));
    return d;
}

json generator_to_json(const GeneratorMatrix& gm) {
    json rows = json::array();
    for (int i = 0; i < gm.k; ++i) {
        json row = json::array();
        for (int j = 0; j < gm.n; ++j) row.push_back(gm.g.at(i, j));
        rows.push_back(row);
    }
    return json{{"field", field_to_json(gm.field->spec())},
                {"k", gm.k},
                {"n", gm.n},
                {"systematic", gm.systematic},
                {"rows", rows}};
}

GeneratorMatrix generator_from_json(const json& j) {
    GeneratorMatrix gm;
    gm.field = Field::make(field_from_json(j.at("field")));
    gm.k = j.at("k").get<int>();
    gm.n = j.at("n").get<int>();
    gm.systematic = j.at("systematic").get<bool>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != gm.k) throw std::invalid_argument("row count != k");
    gm.g = Matrix(gm.field, gm.k, gm.n);
    for (int i = 0; i < gm.k; ++i) {
        if (static_cast<int>(rows[i].size()) != gm.n) throw std::invalid_argument("row length != n");
        for (int c = 0; c < gm.n; ++c) {
            uint64_t v = rows[i][c].get<uint64_t>();
            if (v >= gm.field->order()) throw std::invalid_argument("entry out of field range");
            gm.g.at(i, c) = v;
        }
    }
    return gm;
}

json code_to_json(const LrcCode& code) {
    json rows = json::array();
    for (int i = 0; i < code.k; ++i) {
        json row = json::array();
        for (int c = 0; c < code.n; ++c) row.push_back(code.g.at(i, c));
        rows.push_back(row);
    }
    json local1 = json::array();
    for (const auto& cls : code.local1) local1.push_back(indices_1based(cls));
    json groups = json::array();
    for (int s = 0; s < code.n; ++s) {
        if (code.groups[s].empty()) continue;
        json repair = json::array();
        for (const auto& g : code.groups[s]) repair.push_back(indices_1based(g));
        groups.push_back(json{{"symbol", s + 1}, {"repair", repair}});
    }
    json local1_support = json::array();
    for (const auto& cls : code.local1_support) local1_support.push_back(nested_1based(cls));
    json j{{"kind", to_string(code.kind)},
           {"params", {{"n", code.n}, {"k", code.k}, {"r", code.r}, {"t", code.t}}},
           {"field", field_to_json(code.field->spec())},
           {"generator", rows},
           {"index_sets",
            {{"systematic", indices_1based(code.systematic)},
             {"global", indices_1based(code.global_parities)},
             {"local1", local1},
             {"local2", indices_1based(code.local2)}}},
           {"groups", groups},
           {"provenance",
            {{"N", code.N},
             {"base_q", code.base_q},
             {"points", code.eval_points},
             {"local1_support", local1_support},
             {"local2_support", nested_1based(code.local2_support)}}}};
    return j;
}

LrcCode code_from_json(const json& j) {
    LrcCode code;
    code.kind = lrc_kind_from_string(j.at("kind").get<std::string>());
    const auto& p = j.at("params");
    code.n = p.at("n").get<int>();
    code.k = p.at("k").get<int>();
    code.r = p.at("r").get<int>();
    code.t = p.at("t").get<int>();
    code.field = Field::make(field_from_json(j.at("field")));
    const auto& rows = j.at("generator");
    if (static_cast<int>(rows.size()) != code.k) throw std::invalid_argument("generator row count != k");
    code.g = Matrix(code.field, code.k, code.n);
    for (int i = 0; i < code.k; ++i) {
        if (static_cast<int>(rows[i].size()) != code.n)
            throw std::invalid_argument("generator row length != n");
        for (int c = 0; c < code.n; ++c) {
            uint64_t v = rows[i][c].get<uint64_t>();
            if (v >= code.field->order()) throw std::invalid_argument("entry out of field range");
            code.g.at(i, c) = v;
        }
    }
    const auto& is = j.at("index_sets");
    code.systematic = indices_0based(is.at("systematic"));
    code.global_parities = indices_0based(is.at("global"));
    for (const auto& cls : is.at("local1")) code.local1.push_back(indices_0based(cls));
    code.local2 = indices_0based(is.at("local2"));
    code.groups.assign(code.n, {});
    for (const auto& g : j.at("groups")) {
        int s = g.at("symbol").get<int>() - 1;
        if (s < 0 || s >= code.n) throw std::invalid_argument("group symbol out of range");
        for (const auto& grp : g.at("repair")) code.groups[s].push_back(indices_0based(grp));
    }
    const auto& prov = j.at("provenance");
    code.N = prov.at("N").get<int>();
    code.base_q = prov.at("base_q").get<uint64_t>();
    code.eval_points = prov.at("points").get<std::vector<uint64_t>>();
    for (const auto& cls : prov.at("local1_support"))
        code.local1_support.push_back(nested_0based(cls));
    code.local2_support = nested_0based(prov.at("local2_support"));
    if (code.kind == LrcKind::Construction2) {
        if (static_cast<int>(code.eval_points.size()) < code.k)
            throw std::invalid_argument("construction2 bundle missing evaluation points");
        code.g1 = Matrix(code.field, code.k, code.k);
        for (int i = 0; i < code.k; ++i)
            for (int c = 0; c < code.k; ++c)
                code.g1.at(i, c) = code.field->frobenius(code.eval_points[c], code.base_q, i);
    }
    return code;
}

json availability_to_json(const AvailabilityReport& rep) {
    json per = json::array();
    for (const auto& s : rep.per_symbol)
        per.push_back(json{{"symbol", s.symbol + 1}, {"groups", s.groups}, {"valid", s.valid}});
    return json{{"ok", rep.ok},
                {"all_symbol", rep.all_symbol},
                {"max_group_size", rep.max_group_size},
                {"t_achieved", rep.t_achieved},
                {"per_symbol", per},
                {"failures", rep.failures}};
}

json distance_to_json(const DistanceReport& rep) {
    return json{{"d_min", rep.d_min},
                {"method", rep.method},
                {"exhaustive", rep.exhaustive},
                {"bounds",
                 {{"lemma1_thm1", rep.bound1},
                  {"thm2", rep.bound2},
                  {"singleton", rep.singleton}}},
                {"thm1_applicable", rep.thm1_applicable},
                {"optimal_thm1", rep.optimal1},
                {"optimal_thm2", rep.optimal2},
                {"checks", rep.checks},
                {"witness_erasure", indices_1based(rep.witness_erasure)},
                {"witness_support", indices_1based(rep.witness_support)},
                {"witness_codeword", rep.witness_codeword}};
}

json subcode_to_json(const SubcodeTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps)
        steps.push_back(json{{"index", s.chosen_index + 1},
                             {"group_union", indices_1based(s.group_union)},
                             {"new_coords", indices_1based(s.new_coords)},
                             {"a", s.a},
                             {"pattern", s.sigma},
                             {"surviving", s.surviving}});
    return json{{"steps", steps},
                {"ell", trace.ell},
                {"initial_size", trace.initial_size},
                {"final_size", trace.final_size},
                {"fixed_set", indices_1based(trace.fixed_set)},
                {"agreeing_set", indices_1based(trace.agreeing_set)},
                {"maximal_subset_exit", trace.maximal_subset_exit},
                {"implied_bound", trace.implied_bound}};
}

json assumption1_to_json(const Assumption1Report& rep) {
    return json{{"conformant", rep.conformant}, {"violations", rep.violations}};
}

std::string erased_word_to_text(const ErasedWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.values.size(); ++i) {
        if (i) os << ' ';
        if (w.erased[i]) os << '?';
        else os << w.values[i];
    }
    return os.str();
}

ErasedWord erased_word_from_text(const std::string& line) {
    ErasedWord w;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok == "?") {
            w.values.push_back(0);
            w.erased.push_back(true);
        } else {
            size_t pos = 0;
            uint64_t v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad codeword token: " + tok);
            w.values.push_back(v);
            w.erased.push_back(false);
        }
    }
    if (w.values.empty()) throw std::invalid_argument("empty codeword line");
    return w;
}

std::string message_to_text(const std::vector<uint64_t>& msg) {
    std::ostringstream os;
    for (size_t i = 0; i < msg.size(); ++i) {
        if (i) os << ' ';
        os << msg[i];
    }
    return os.str();
}

std::vector<uint64_t> message_from_text(const std::string& line) {
    std::vector<uint64_t> msg;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        size_t pos = 0;
        msg.push_back(std::stoull(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument("bad message token: " + tok);
    }
    if (msg.empty()) throw std::invalid_argument("empty message line");
    return msg;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace lrc
