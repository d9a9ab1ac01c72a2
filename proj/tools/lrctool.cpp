#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lrc/io.hpp"

using namespace lrc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOperation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonExhaustive = 3;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(out_path, content.back() == '\n' ? content : content + "\n");
    }
}

FieldPtr load_field(const std::string& path) {
    return Field::make(field_from_json(read_json_file(path)));
}

// smallest binary field whose order covers `points` evaluation points
FieldPtr default_binary_field(int points) {
    uint32_t m = 1;
    while ((1ull << m) < static_cast<uint64_t>(points)) ++m;
    return Field::make(2, m);
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        if (v < 1) throw CLI::ValidationError("indices are 1-based");
        out.push_back(v - 1);
    }
    return out;
}

std::string first_line(const std::string& text) {
    auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

std::string asymptotic_table(const std::vector<AsymptoticRow>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "n,k,r,t,rate,bound_thm1,mds_distance,ratio\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.k << ',' << r.r << ',' << r.t << ',' << r.rate << ','
               << r.bound1 << ',' << r.mds_distance << ',' << r.ratio << '\n';
    } else if (format == "json") {
        json a = json::array();
        for (const auto& r : rows)
            a.push_back(json{{"n", r.n},
                             {"k", r.k},
                             {"r", r.r},
                             {"t", r.t},
                             {"rate", r.rate},
                             {"bound_thm1", r.bound1},
                             {"mds_distance", r.mds_distance},
                             {"ratio", r.ratio}});
        os << a.dump(2) << '\n';
    } else {
        os << "   n     k  r  t    rate  d_bound  d_mds    ratio\n";
        for (const auto& r : rows) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%4d %5d %2d %2d  %.4f  %7d  %5d  %.5f\n", r.n, r.k,
                          r.r, r.t, r.rate, r.bound1, r.mds_distance, r.ratio);
            os << buf;
        }
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally repairable codes with availability: builders, codecs and analyses"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path, field_path, format = "json";
    long budget = 5000000;
    int parallel = 1;
    uint64_t seed = 1;
    app.add_option("-o,--out", out_path, "output file (default stdout)");
    app.add_option("--field", field_path, "field spec JSON file");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--budget", budget, "verification budget")->check(CLI::PositiveNumber);
    app.add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "RNG seed for sampled checks");

    // design
    auto* design = app.add_subcommand("design", "build a resolvable design or membership matrix");
    std::string design_kind;
    design->add_option("kind", design_kind, "kirkman15 | affine | zigzag")->required();
    int d_q = 0, d_r = 0, d_t = 0;
    bool d_check = false;
    design->add_option("--q", d_q, "affine plane order (prime power)");
    design->add_option("--r", d_r, "zigzag group size");
    design->add_option("--t", d_t, "number of parallel classes to keep");
    design->add_flag("--check", d_check, "run the membership-matrix checker");

    // construct
    auto* construct = app.add_subcommand("construct", "build a code from a membership matrix");
    std::string c_kind, c_R;
    int c_N = 0, c_r = 0, c_t = 0;
    construct->add_option("kind", c_kind, "c1 | c2")->required();
    construct->add_option("--R", c_R, "membership matrix JSON")->required();
    construct->add_option("--N", c_N, "systematic MDS part length")->required();
    construct->add_option("--r", c_r, "override group size");
    construct->add_option("--t", c_t, "override availability");

    // encode / corrupt / decode / repair
    auto* encode_cmd = app.add_subcommand("encode", "message -> codeword");
    auto* corrupt = app.add_subcommand("corrupt", "erase codeword positions");
    auto* decode_cmd = app.add_subcommand("decode", "erased codeword -> message");
    auto* repair_cmd = app.add_subcommand("repair", "reconstruct one symbol from a repair group");
    std::string code_path, in_path, erase_list;
    int rp_symbol = 0, rp_group = 1;
    for (auto* c : {encode_cmd, decode_cmd, repair_cmd})
        c->add_option("--code", code_path, "code bundle JSON")->required();
    for (auto* c : {encode_cmd, corrupt, decode_cmd, repair_cmd})
        c->add_option("--in", in_path, "input file")->required();
    corrupt->add_option("--erase", erase_list, "comma-separated 1-based positions")->required();
    repair_cmd->add_option("--symbol", rp_symbol, "symbol to rebuild (1-based)")->required();
    repair_cmd->add_option("--group", rp_group, "repair group to use (1-based)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "bounds, exact distance, subcode trace, tables");
    std::string a_code, a_family = "zigzag", a_range;
    bool a_bounds = false, a_dmin = false, a_subcode = false, a_asym = false;
    int a_t = 2;
    double a_rate = 0.5;
    analyze->add_option("--code", a_code, "code bundle JSON");
    analyze->add_flag("--bounds", a_bounds, "print distance bounds");
    analyze->add_flag("--dmin", a_dmin, "exact minimum distance with witness");
    analyze->add_flag("--subcode", a_subcode, "run the subcode-restriction bound");
    analyze->add_flag("--asymptotics", a_asym, "distance-to-MDS ratio table");
    analyze->add_option("--family", a_family, "zigzag | affine");
    analyze->add_option("--t", a_t, "availability for the table");
    analyze->add_option("--range", a_range, "parameter range lo..hi");
    analyze->add_option("--rate", a_rate, "target rate for the table");

    // verify
    auto* verify = app.add_subcommand("verify", "certify repair metadata of a bundle");
    std::string v_code;
    verify->add_option("--code", v_code, "code bundle JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (design->parsed()) {
            if (design_kind == "kirkman15") {
                auto d = build_kirkman15();
                int t = d_t > 0 ? d_t : d.c;
                if (d_check) {
                    auto rep = check_assumption1(design_to_membership(d, t));
                    emit(out_path, assumption1_to_json(rep).dump(2));
                    return rep.conformant ? kExitOk : kExitOperation;
                }
                emit(out_path, design_to_json(d).dump(2));
            } else if (design_kind == "affine") {
                if (d_q < 2) throw CLI::ValidationError("affine needs --q >= 2");
                auto d = build_affine_design(static_cast<uint32_t>(d_q));
                int t = d_t > 0 ? d_t : d.c;
                if (d_check) {
                    auto rep = check_assumption1(design_to_membership(d, t));
                    emit(out_path, assumption1_to_json(rep).dump(2));
                    return rep.conformant ? kExitOk : kExitOperation;
                }
                emit(out_path, design_to_json(d).dump(2));
            } else if (design_kind == "zigzag") {
                if (d_r < 1 || d_t < 1) throw CLI::ValidationError("zigzag needs --r and --t");
                auto R = build_zigzag_membership(d_r, d_t);
                if (d_check) {
                    auto rep = check_assumption1(R);
                    emit(out_path, assumption1_to_json(rep).dump(2));
                    return rep.conformant ? kExitOk : kExitOperation;
                }
                emit(out_path, membership_to_json(R).dump(2));
            } else {
                std::cerr << "unknown design kind: " << design_kind << "\n";
                return kExitUsage;
            }
            return kExitOk;
        }

        if (construct->parsed()) {
            auto R = membership_from_json(read_json_file(c_R));
            int r = c_r > 0 ? c_r : R.r;
            int t = c_t > 0 ? c_t : R.t;
            if (t < static_cast<int>(R.classes.size())) R = R.truncate_classes(t);
            LrcCode code;
            if (c_kind == "c1") {
                FieldPtr f = field_path.empty() ? default_binary_field(c_N + t)
                                                : load_field(field_path);
                auto ghat = systematic_rs(f, c_N + t, R.k);
                code = construction1(ghat, R, r, t);
            } else if (c_kind == "c2") {
                FieldPtr f = field_path.empty()
                                 ? Field::make(2, static_cast<uint32_t>(c_N + t - 1))
                                 : load_field(field_path);
                auto gab = gabidulin(f, 2, c_N + t - 1, R.k);
                code = construction2(gab, R, r, t);
            } else {
                std::cerr << "unknown construction: " << c_kind << "\n";
                return kExitUsage;
            }
            emit(out_path, code_to_json(code).dump(2));
            std::cerr << "(n,k,r,t) = (" << code.n << "," << code.k << "," << code.r << ","
                      << code.t << ")  rate " << static_cast<double>(code.k) / code.n
                      << "  d-bound " << bound_thm1(code.n, code.k, code.r, code.t) << "\n";
            return kExitOk;
        }

        if (encode_cmd->parsed()) {
            auto code = code_from_json(read_json_file(code_path));
            auto msg = message_from_text(first_line(read_text_file(in_path)));
            auto cw = lrc::encode(code, msg);
            emit(out_path, erased_word_to_text(ErasedWord::from_codeword(cw)));
            return kExitOk;
        }

        if (corrupt->parsed()) {
            auto w = erased_word_from_text(first_line(read_text_file(in_path)));
            auto positions = parse_index_list(erase_list);
            for (int p : positions)
                if (p >= static_cast<int>(w.values.size()))
                    throw std::invalid_argument("erase position beyond codeword length");
            emit(out_path, erased_word_to_text(w.with_erasures(positions)));
            return kExitOk;
        }

        if (decode_cmd->parsed()) {
            auto code = code_from_json(read_json_file(code_path));
            auto w = erased_word_from_text(first_line(read_text_file(in_path)));
            DecodeOutcome out;
            if (code.kind == LrcKind::Construction1) out = decode_thm3(code, w);
            else if (code.kind == LrcKind::Construction2) out = decode_thm4(code, w);
            else out = mds_erasure_decode(code.as_generator(), w);
            if (!out.ok) {
                std::cerr << "unrecoverable erasure pattern (achieved rank " << out.rank << " of "
                          << code.k << ")\n";
                return kExitOperation;
            }
            emit(out_path, message_to_text(out.message));
            std::cerr << "path: " << out.path << "\n";
            return kExitOk;
        }

        if (repair_cmd->parsed()) {
            auto code = code_from_json(read_json_file(code_path));
            auto w = erased_word_from_text(first_line(read_text_file(in_path)));
            auto out = repair_symbol(code, w, rp_symbol - 1, rp_group - 1);
            if (!out.ok) {
                std::cerr << out.error << "\n";
                return kExitOperation;
            }
            json rep{{"symbol", rp_symbol}, {"value", out.value}, {"group", json::array()}};
            for (int i : out.group_used) rep["group"].push_back(i + 1);
            emit(out_path, rep.dump(2));
            return kExitOk;
        }

        if (analyze->parsed()) {
            json report = json::object();
            bool non_exhaustive = false;
            if (a_asym) {
                int lo = 2, hi = 5;
                if (!a_range.empty()) {
                    auto dots = a_range.find("..");
                    if (dots == std::string::npos)
                        throw CLI::ValidationError("--range expects lo..hi");
                    lo = std::stoi(a_range.substr(0, dots));
                    hi = std::stoi(a_range.substr(dots + 2));
                }
                auto fam = a_family == "affine" ? AsymptoticFamily::Affine : AsymptoticFamily::Zigzag;
                auto rows = asymptotic_report(fam, a_t, lo, hi, a_rate);
                emit(out_path, asymptotic_table(rows, format));
                return kExitOk;
            }
            if (a_code.empty()) throw CLI::ValidationError("analyze needs --code (or --asymptotics)");
            auto code = code_from_json(read_json_file(a_code));
            if (a_bounds) {
                report["bounds"] = json{
                    {"lemma1", bound_lemma1(code.k, code.r, code.t)},
                    {"thm1", bound_thm1(code.n, code.k, code.r, code.t)},
                    {"thm2", bound_thm2(code.n, code.k, code.r, code.t)},
                    {"singleton", code.n - code.k + 1}};
            }
            if (a_dmin) {
                DminOptions opts;
                opts.budget = budget;
                opts.threads = parallel;
                auto rep = dmin_exact(code, opts);
                report["distance"] = distance_to_json(rep);
                non_exhaustive = non_exhaustive || !rep.exhaustive;
            }
            if (a_subcode) {
                auto cb = enumerate_codebook(code);
                report["subcode"] = subcode_to_json(subcode_bound(cb, code.r, code.t));
            }
            emit(out_path, report.dump(2));
            return non_exhaustive ? kExitNonExhaustive : kExitOk;
        }

        if (verify->parsed()) {
            auto code = code_from_json(read_json_file(v_code));
            auto rep = verify_availability(code);
            emit(out_path, availability_to_json(rep).dump(2));
            return rep.ok ? kExitOk : kExitOperation;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitOperation;
    }
    return kExitUsage;
}
