// bbw-tilt: Bott-algorithm cohomology on flag varieties and Grassmannians,
// graded Ext profiles on cotangent bundles, and tilting checks.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bbw/bbw.hpp"
#include "bbw/json_io.hpp"
#include "bbw/selftest.hpp"

namespace {

using namespace bbw;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitWitness = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "0,-2 0" -> {0,-2,0}
Weight parse_weight(const std::vector<std::string>& tokens) {
    std::vector<Entry> out;
    for (std::string token : tokens) {
        for (char& c : token)
            if (c == ',') c = ' ';
        std::istringstream in(token);
        std::string piece;
        while (in >> piece) {
            std::size_t used = 0;
            Entry v = 0;
            try {
                v = std::stoll(piece, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != piece.size()) throw UsageError("not an integer: '" + piece + "'");
            out.push_back(v);
        }
    }
    if (out.empty()) throw UsageError("empty weight");
    return Weight(std::move(out));
}

Weight parse_weight(const std::string& token) { return parse_weight(std::vector<std::string>{token}); }

std::vector<Weight> parse_collection(const std::string& text) {
    std::vector<Weight> out;
    std::istringstream in(text);
    std::string member;
    while (std::getline(in, member, ';'))
        if (member.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_weight(member));
    if (out.empty()) throw UsageError("empty collection");
    return out;
}

struct RunConfig {
    std::string format = "json";
    std::string output;
    std::size_t threads = default_threads();
    std::uint64_t seed = 20240917;
    std::size_t k = 2;
    std::size_t n = 4;
    std::size_t cutoff = 30;
};

class Output {
public:
    explicit Output(const RunConfig& cfg) : cfg_(cfg) {}
    bool json_mode() const { return cfg_.format == "json"; }

    void emit(const json& j, const std::string& text) const {
        const std::string body = json_mode() ? j.dump(2) + "\n" : text;
        if (cfg_.output.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream file(cfg_.output);
        if (!file) throw UsageError("cannot write " + cfg_.output);
        file << body;
    }

private:
    const RunConfig& cfg_;
};

std::string bott_text(const BottResult& r) {
    if (r.is_vanishing()) return "vanishes in all degrees\n";
    return "H^" + std::to_string(r.degree()) + " = Sigma^" + r.dominant().to_string() + " V, dim " +
           r.dimension().str() + "\n";
}

std::string degree_map_text(const DegreeMap& h) {
    if (h.empty()) return "all degrees vanish\n";
    std::string out;
    for (const auto& [i, dim] : h) out += "H^" + std::to_string(i) + ": " + dim.str() + "\n";
    return out;
}

std::string degree_map_inline(const DegreeMap& h) {
    if (h.empty()) return "0";
    std::string out;
    for (const auto& [i, dim] : h) out += (out.empty() ? "" : ", ") + ("H^" + std::to_string(i) + " = " + dim.str());
    return out;
}

std::string profile_text(const GradedHomProfile& p) {
    std::string out = "Hom^i(" + p.alpha().to_string() + ", " + p.beta().to_string() + ") on T*G(" +
                      std::to_string(p.context().k()) + "," + std::to_string(p.context().n()) +
                      "), sym degrees 0.." + std::to_string(p.cutoff()) + "\n";
    if (p.entries().empty()) out += "  no nonzero pieces\n";
    for (const GradedPiece& piece : p.pieces())
        out += "  i=" + std::to_string(piece.degree) + " n=" + std::to_string(piece.sym_degree) +
               " lambda=" + piece.lambda.weight().to_string() + " dim " + piece.dim.str() + "\n";
    return out;
}

std::string tilting_text(const TiltingReport& r) {
    std::string out;
    for (const Verdict& v : r.verdicts) {
        if (v.status == VerdictStatus::certified_zero) continue;
        out += "Ext^" + std::to_string(v.degree) + "(" + v.source.to_string() + ", " + v.target.to_string() +
               ") nonzero: n=" + std::to_string(v.witness->sym_degree) + " lambda=" +
               v.witness->lambda.weight().to_string() + " dim " + v.witness->dim.str() +
               " (exact on X0, upper bound on X)\n";
    }
    out += r.all_vanish() ? "all Ext^i, i != 0, certified zero up to sym degree " + std::to_string(r.cutoff) + "\n"
                          : "not tilting: witnesses above\n";
    return out;
}

std::string g24_text(const G24CaseTable& t) {
    std::ostringstream out;
    out << "G(2,4), Delta = (l1-j, l2-j, -l2, -l1), 0 < j < 4, |lambda| <= " << t.max_size << "\n";
    for (G24Case c : {G24Case::first, G24Case::second, G24Case::third_upper, G24Case::third_wall,
                      G24Case::third_lower})
        out << "  " << to_string(c) << ": " << t.count(c) << " cells\n";
    for (const G24Cell& c : t.cells) {
        if (c.which == G24Case::first && c.agrees && c.consistent) continue;
        out << "  j=" << c.j << " lambda=(" << c.lambda1 << "," << c.lambda2 << ") " << to_string(c.which) << " -> "
            << (c.cohomology.is_vanishing() ? std::string("vanishes")
                                            : "H^" + std::to_string(c.cohomology.degree()) + " dim " +
                                                  c.cohomology.dimension().str())
            << (c.agrees && c.consistent ? "" : "  MISMATCH") << "\n";
    }
    out << (t.all_agree() ? "all cells agree with the Bott computation\n" : "DISAGREEMENT\n");
    return out.str();
}

int run_selftest(const RunConfig& cfg, const Output& out) {
    json suites = json::array();
    std::string text;
    bool ok = true;
    for (const selftest::SuiteResult& s : selftest::run_all(cfg.seed)) {
        ok = ok && s.passed();
        suites.push_back(json{{"name", s.name}, {"checks", s.checks}, {"passed", s.passed()}, {"failures", s.failures}});
        text += std::string(s.passed() ? "PASS " : "FAIL ") + s.name + " (" + std::to_string(s.checks) + " checks)\n";
        for (const std::string& f : s.failures) text += "    " + f + "\n";
    }
    out.emit(json{{"seed", cfg.seed}, {"passed", ok}, {"suites", suites}}, text);
    return ok ? kExitOk : kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bott-algorithm cohomology and tilting checks on cotangent bundles of Grassmannians"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
    app.add_option("--threads", cfg.threads, "Worker threads (BBW_TILT_THREADS overrides the default)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");

    auto add_context = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "Rank of the tautological subbundle")->required();
        sub->add_option("--n", cfg.n, "dim V")->required();
    };

    std::vector<std::string> bott_args;
    auto* bott_cmd = app.add_subcommand("bott", "H^*(F(V), O(Delta)) by the Bott algorithm");
    bott_cmd->add_option("delta", bott_args, "Weight entries")->required()->allow_extra_args();

    std::string lr_lambda, lr_mu;
    std::size_t lr_rank = 0;
    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson expansion of Sigma^lambda (x) Sigma^mu");
    lr_cmd->add_option("lambda", lr_lambda, "Partition, comma-separated")->required();
    lr_cmd->add_option("mu", lr_mu, "Partition, comma-separated")->required();
    lr_cmd->add_option("--rank", lr_rank, "Rank of the bundle")->required()->check(CLI::PositiveNumber);

    std::string alpha_text, beta_text;
    std::size_t sym_degree = 0;
    auto* hg_cmd = app.add_subcommand("hom-grassmann", "Hom^i_G(Sigma^alpha U, Sigma^beta U (x) Sym^d T_G)");
    add_context(hg_cmd);
    hg_cmd->add_option("--alpha", alpha_text)->required();
    hg_cmd->add_option("--beta", beta_text)->required();
    hg_cmd->add_option("--sym-degree", sym_degree)->required();

    std::size_t expect_from = 0;
    auto* ht_cmd = app.add_subcommand("hom-total", "Graded Hom^i on T*G up to a sym-degree cutoff");
    add_context(ht_cmd);
    ht_cmd->add_option("--alpha", alpha_text)->required();
    ht_cmd->add_option("--beta", beta_text)->required();
    ht_cmd->add_option("--cutoff", cfg.cutoff)->capture_default_str();
    ht_cmd->add_option("--expect-vanishing-from", expect_from,
                       "Exit 2 if any piece with i >= this degree is nonzero (0 = report only)");

    std::string collection_text;
    auto* tilt_cmd = app.add_subcommand("check-tilting", "Ext^i, i != 0, for every ordered pair of a collection");
    add_context(tilt_cmd);
    tilt_cmd->add_option("--collection", collection_text, "Weights separated by ';'")->required();
    tilt_cmd->add_option("--cutoff", cfg.cutoff)->capture_default_str();

    Entry jmax = 0;
    auto* van_cmd = app.add_subcommand("check-vanishing", "H^i(T*G, O(j)) = 0 for i > 0, 0 <= j <= jmax");
    add_context(van_cmd);
    van_cmd->add_option("--jmax", jmax)->required()->check(CLI::NonNegativeNumber);
    van_cmd->add_option("--cutoff", cfg.cutoff)->capture_default_str();

    std::string what;
    std::size_t reproduce_n = 0;
    auto* rep_cmd = app.add_subcommand("reproduce", "Reproduce a worked example: g24 | beilinson <n> | tpn <n>");
    rep_cmd->add_option("what", what)->required()->check(CLI::IsMember({"g24", "beilinson", "tpn"}));
    rep_cmd->add_option("n", reproduce_n, "Dimension of P^n");
    rep_cmd->add_option("--cutoff", cfg.cutoff)->capture_default_str();

    auto* self_cmd = app.add_subcommand("selftest", "Run the oracle suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Output out(cfg);
    try {
        if (*bott_cmd) {
            const BottResult r = bott(parse_weight(bott_args));
            out.emit(r, bott_text(r));
            return kExitOk;
        }
        if (*lr_cmd) {
            const SchurExpansion e = lr_coefficients(Partition::from_weight(parse_weight(lr_lambda)),
                                                     Partition::from_weight(parse_weight(lr_mu)), lr_rank);
            std::string text;
            for (const auto& [w, mult] : e) text += mult.str() + " x " + w.to_string() + "\n";
            out.emit(e, text);
            return kExitOk;
        }
        if (*hg_cmd) {
            const GrassmannContext ctx(cfg.k, cfg.n);
            const Weight alpha = parse_weight(alpha_text);
            const Weight beta = parse_weight(beta_text);
            const DegreeMap h = hom_grassmann(ctx, alpha, beta, sym_degree);
            out.emit(hom_grassmann_to_json(ctx, alpha, beta, sym_degree, h), degree_map_text(h));
            return kExitOk;
        }
        if (*ht_cmd) {
            const GradedHomProfile p =
                hom_total(GrassmannContext(cfg.k, cfg.n), parse_weight(alpha_text), parse_weight(beta_text),
                          cfg.cutoff, cfg.threads);
            out.emit(p, profile_text(p));
            return expect_from > 0 && !p.vanishes_from(expect_from) ? kExitWitness : kExitOk;
        }
        if (*tilt_cmd) {
            const TiltingReport r =
                check_tilting(GrassmannContext(cfg.k, cfg.n), parse_collection(collection_text), cfg.cutoff, cfg.threads);
            out.emit(r, tilting_text(r));
            return r.all_vanish() ? kExitOk : kExitWitness;
        }
        if (*van_cmd) {
            const VanishingReport r = check_lemma_vanishing(GrassmannContext(cfg.k, cfg.n), jmax, cfg.cutoff, cfg.threads);
            std::string text;
            for (const VanishingViolation& v : r.violations)
                text += "j=" + std::to_string(v.twist) + " i=" + std::to_string(v.piece.degree) +
                        " n=" + std::to_string(v.piece.sym_degree) + " dim " + v.piece.dim.str() + "\n";
            text += r.holds() ? "H^i(X0, O(j)) = 0 for all i > 0 up to the cutoff\n" : "vanishing fails\n";
            out.emit(r, text);
            return r.holds() ? kExitOk : kExitWitness;
        }
        if (*rep_cmd) {
            if (what == "g24") {
                const G24CaseTable t = reproduce_g24_cases(cfg.cutoff);
                out.emit(t, g24_text(t));
                return t.all_agree() ? kExitOk : kExitWitness;
            }
            if (reproduce_n < 1) throw UsageError("reproduce " + what + " needs n >= 1");
            if (what == "beilinson") {
                const auto table = beilinson_table(reproduce_n);
                const json j = beilinson_to_json(reproduce_n, table);
                std::string text;
                for (const BeilinsonEntry& e : table)
                    text += "Ext^*(O(-" + std::to_string(e.a) + "), O(-" + std::to_string(e.b) + ")): " +
                            degree_map_inline(e.ext) +
                            (e.ok ? "" : "  MISMATCH") + "\n";
                out.emit(j, text);
                return j.at("all_ok").get<bool>() ? kExitOk : kExitWitness;
            }
            const TiltingReport r = check_tilting(GrassmannContext(1, reproduce_n + 1),
                                                  beilinson_collection(reproduce_n), cfg.cutoff, cfg.threads);
            out.emit(r, tilting_text(r));
            return r.all_vanish() ? kExitOk : kExitWitness;
        }
        if (*self_cmd) return run_selftest(cfg, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
