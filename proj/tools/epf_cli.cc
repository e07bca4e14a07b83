// epf: extended parking-function toolkit.
//
// Subcommands: enumerate, act, char, frob, orbits, orbits-rational,
// classify, slim, selftest. Plain text by default, JSON with --json.
// All numbers in JSON output are decimal integer strings or "num/den"
// rational strings; output is byte-identical across runs.
//
// Exit codes: 0 success, 1 validation error, 2 internal assertion failure
// (integrality or consistency check), 3 reported conjecture mismatch.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "epf/action.hh"
#include "epf/character.hh"
#include "epf/classify.hh"
#include "epf/numtheory.hh"
#include "epf/orbits.hh"
#include "epf/parking.hh"
#include "epf/slimgraph.hh"
#include "epf/symfun.hh"

using json = nlohmann::ordered_json;
using namespace epf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAssertion = 2;
constexpr int kExitConjecture = 3;

Partition parse_lambda(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        parts.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

// Comma-free when every entry is a single digit, comma-separated otherwise.
std::string word(const std::vector<int>& coords) {
    bool small = true;
    for (int v : coords) small = small && v >= 0 && v < 10;
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i && !small) out += ',';
        out += std::to_string(coords[i]);
    }
    return out;
}

json coords_json(const std::vector<int>& coords) {
    json arr = json::array();
    for (int v : coords) arr.push_back(std::to_string(v));
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    bool json_out = false;
    bool oracle = false;
    bool list = false;
    bool allow_big = false;
    int n = 0, c = 0, a = 0, b = 0;
    std::string lambda, perm, input, basis = "p", mode;
    int max_n = 5;
};

int cmd_enumerate(const Options& opt) {
    std::vector<std::vector<int>> rows;
    std::string label;
    if (opt.a > 0 || opt.b > 0) {
        if (opt.c > 0) {
            for (const auto& x : build_epf_set_rational(opt.a, opt.b, opt.c))
                rows.push_back(x.coords);
            label = "epf_rational";
        } else {
            rows = enumerate_rational(opt.a, opt.b);
            label = "pf_rational";
        }
    } else if (opt.c > 0) {
        for (const auto& x : build_epf_set(opt.n, opt.c)) rows.push_back(x.coords);
        label = "epf";
    } else {
        if (opt.n < 1) throw std::invalid_argument("enumerate: need --n or --a/--b");
        rows = enumerate_pf(opt.n);
        label = "pf";
    }
    if (opt.json_out) {
        json j;
        j["set"] = label;
        j["count"] = std::to_string(rows.size());
        j["elements"] = json::array();
        for (const auto& r : rows) j["elements"].push_back(coords_json(r));
        emit(j);
    } else {
        for (const auto& r : rows) std::printf("%s\n", word(r).c_str());
    }
    return kExitOk;
}

int cmd_act(const Options& opt) {
    const Perm pi = Perm::from_one_line(opt.perm);
    std::vector<int> coords;
    for (char ch : opt.input) {
        if (ch == ',') continue;
        if (ch < '0' || ch > '9') throw std::invalid_argument("act: input must be digits");
        coords.push_back(ch - '0');
    }
    if (opt.n < 1 || opt.c < 1 || opt.c > opt.n)
        throw std::invalid_argument("act: need 1 <= c <= n");
    ExtendedPF x{coords, opt.n, opt.c % opt.n};
    int sum = 0;
    for (int v : coords) sum = (sum + v) % opt.n;
    if (static_cast<int>(coords.size()) != opt.n || sum != x.target ||
        !is_parking(std::span<const int>(coords.data(), coords.size() - 1)))
        throw std::invalid_argument("act: input is not an element of the stated set");
    const ExtendedPF y = apply(pi, x);
    if (opt.json_out) {
        json j;
        j["input"] = coords_json(x.coords);
        j["perm"] = opt.perm;
        j["image"] = coords_json(y.coords);
        emit(j);
    } else {
        std::printf("%s\n", word(y.coords).c_str());
    }
    return kExitOk;
}

int cmd_char(const Options& opt) {
    if (!opt.lambda.empty()) {
        const Partition lam = parse_lambda(opt.lambda);
        const Int v = chi(opt.n, opt.c, lam);
        if (opt.json_out) {
            json j;
            j["n"] = std::to_string(opt.n);
            j["c"] = std::to_string(opt.c);
            j["lambda"] = lam.key();
            j["value"] = v.get_str();
            emit(j);
        } else {
            std::printf("%s\n", v.get_str().c_str());
        }
        return kExitOk;
    }
    const CharacterVector cv = character_vector(opt.n, opt.c);
    if (opt.json_out) {
        json j;
        j["n"] = std::to_string(opt.n);
        j["c"] = std::to_string(opt.c);
        json vals = json::object();
        for (const auto& [lam, v] : cv.values) vals[lam.key()] = v.get_str();
        j["values"] = vals;
        emit(j);
    } else {
        for (const auto& [lam, v] : cv.values)
            std::printf("%-20s %s\n", lam.key().c_str(), v.get_str().c_str());
    }
    return kExitOk;
}

int cmd_frob(const Options& opt) {
    const SymFun f = frobenius(character_vector(opt.n, opt.c));
    SymFun out = f;
    if (opt.basis == "h")
        out = to_h(f);
    else if (opt.basis == "s")
        out = to_schur(f);
    else if (opt.basis != "p")
        throw std::invalid_argument("frob: basis must be one of p, h, s");
    if (opt.json_out) {
        json j;
        j["n"] = std::to_string(opt.n);
        j["c"] = std::to_string(opt.c);
        j["basis"] = opt.basis;
        json coeffs = json::object();
        for (const auto& [lam, co] : out.coeffs) coeffs[lam.key()] = rat_str(co);
        j["coeffs"] = coeffs;
        if (opt.basis == "h") j["h_positive"] = is_h_positive(out);
        if (opt.basis == "s") j["schur_positive"] = is_schur_positive(out);
        emit(j);
    } else {
        for (const auto& [lam, co] : out.coeffs)
            std::printf("%-20s %s\n", lam.key().c_str(), rat_str(co).c_str());
    }
    return kExitOk;
}

int cmd_orbits(const Options& opt) {
    OrbitReport rep;
    rep.n = opt.n;
    rep.c = opt.c;
    const bool closed_form = opt.c == 1 || opt.c == opt.n;
    if (closed_form)
        rep.formula_count = opt.c == 1 ? orbits_c1(opt.n) : orbits_cn(opt.n);
    if (opt.oracle || !closed_form) rep.oracle_count = burnside_orbit_count(opt.n, opt.c);
    if (!closed_form) rep.formula_count = *rep.oracle_count;
    if (rep.oracle_count && *rep.oracle_count != rep.formula_count)
        throw std::logic_error("orbits: closed form disagrees with the Burnside oracle");

    if (opt.json_out) {
        json j;
        j["n"] = std::to_string(opt.n);
        j["c"] = std::to_string(opt.c);
        j["orbits"] = rep.formula_count.get_str();
        j["method"] = closed_form ? "formula" : "burnside";
        if (rep.oracle_count) j["oracle"] = rep.oracle_count->get_str();
        if (opt.list) {
            json orbits = json::array();
            for (const auto& orbit : orbit_decomposition(opt.n, opt.c)) {
                json one = json::array();
                for (const auto& x : orbit) one.push_back(word(x.coords));
                orbits.push_back(one);
            }
            j["elements"] = orbits;
        }
        emit(j);
    } else {
        std::printf("%s\n", rep.formula_count.get_str().c_str());
        if (rep.oracle_count && closed_form && opt.oracle)
            std::printf("oracle agrees: %s\n", rep.oracle_count->get_str().c_str());
        if (opt.list)
            for (const auto& orbit : orbit_decomposition(opt.n, opt.c)) {
                std::string line;
                for (const auto& x : orbit) line += word(x.coords) + " ";
                std::printf("{ %s}\n", line.c_str());
            }
    }
    return kExitOk;
}

int cmd_orbits_rational(const Options& opt) {
    OrbitReport rep;
    rep.a = opt.a;
    rep.b = opt.b;
    rep.formula_count = orbits_rational_c1(opt.a, opt.b);
    if (opt.oracle) {
        rep.oracle_count = burnside_orbit_count_rational(opt.a, opt.b, 1);
        if (*rep.oracle_count != rep.formula_count)
            throw std::logic_error("orbits-rational: formula disagrees with the Burnside oracle");
    }
    if (opt.json_out) {
        json j;
        j["a"] = std::to_string(opt.a);
        j["b"] = std::to_string(opt.b);
        j["c"] = "1";
        j["orbits"] = rep.formula_count.get_str();
        if (rep.oracle_count) j["oracle"] = rep.oracle_count->get_str();
        emit(j);
    } else {
        std::printf("%s\n", rep.formula_count.get_str().c_str());
        if (rep.oracle_count)
            std::printf("oracle agrees: %s\n", rep.oracle_count->get_str().c_str());
    }
    return kExitOk;
}

int cmd_classify(const Options& opt) {
    const Classification cl = classify(opt.n);
    if (opt.json_out) {
        json classes = json::object();
        for (long k : d_set(opt.n)) {
            json fiber = json::array();
            for (long m : c_set(opt.n, k)) fiber.push_back(std::to_string(m));
            classes[std::to_string(k)] = fiber;
        }
        json j;
        j["classes"] = classes;
        j["count"] = std::to_string(cl.count);
        emit(j);
    } else {
        std::printf("%ld classes\n", cl.count);
        for (long k : d_set(opt.n)) {
            std::string line;
            for (long m : c_set(opt.n, k)) line += std::to_string(m) + " ";
            std::printf("k=%ld: %s\n", k, line.c_str());
        }
    }
    return kExitOk;
}

int cmd_slim(const Options& opt) {
    if (opt.n > 5 && !opt.allow_big)
        throw std::invalid_argument("slim: n = 6 needs --allow-big (long exact reduction)");
    const bool progress = opt.n >= 6;

    if (opt.mode == "dim") {
        const SpanBasis basis = build_Vn(opt.n, progress);
        const Int expected = to_int(rat_pow(Int(opt.n), opt.n - 2));
        if (opt.json_out) {
            json j;
            j["n"] = std::to_string(opt.n);
            j["dimension"] = std::to_string(basis.dimension());
            j["expected"] = expected.get_str();
            emit(j);
        } else {
            std::printf("dim V_%d = %zu (n^{n-2} = %s)\n", opt.n, basis.dimension(),
                        expected.get_str().c_str());
        }
        return kExitOk;
    }
    if (opt.mode == "char") {
        const SpanBasis basis = build_Vn(opt.n, progress);
        if (opt.json_out) {
            json traces = json::object();
            for (const auto& lam : partitions_of(opt.n))
                traces[lam.key()] = sigma_character(basis, lam).get_str();
            json j;
            j["n"] = std::to_string(opt.n);
            j["dimension"] = std::to_string(basis.dimension());
            j["traces"] = traces;
            emit(j);
        } else {
            for (const auto& lam : partitions_of(opt.n))
                std::printf("%-20s %s\n", lam.key().c_str(),
                            sigma_character(basis, lam).get_str().c_str());
        }
        return kExitOk;
    }
    if (opt.mode == "verify-conjecture") {
        const ConjectureReport rep = verify_conjecture(opt.n, progress);
        if (opt.json_out) {
            json rows = json::object();
            for (const auto& row : rep.rows) {
                json r;
                r["sigma"] = row.sigma.get_str();
                r["chi_c1"] = row.chi.get_str();
                r["equal"] = row.sigma == row.chi;
                rows[row.lambda.key()] = r;
            }
            json j;
            j["n"] = std::to_string(opt.n);
            j["dimension"] = rep.dimension.get_str();
            j["expected_dimension"] = rep.expected_dimension.get_str();
            j["classes"] = rows;
            j["verdict"] = rep.pass ? "pass" : "mismatch";
            emit(j);
        } else {
            std::printf("dim V_%d = %s (expected %s)\n", opt.n, rep.dimension.get_str().c_str(),
                        rep.expected_dimension.get_str().c_str());
            for (const auto& row : rep.rows)
                std::printf("%-20s sigma=%-10s chi=%-10s %s\n", row.lambda.key().c_str(),
                            row.sigma.get_str().c_str(), row.chi.get_str().c_str(),
                            row.sigma == row.chi ? "ok" : "MISMATCH");
            std::printf("verdict: %s\n", rep.pass ? "pass" : "mismatch");
        }
        return rep.pass ? kExitOk : kExitConjecture;
    }
    if (opt.mode == "verify-table") {
        const TableReport rep = verify_table(opt.n);
        if (opt.json_out) {
            json checks = json::array();
            for (const auto& check : rep.checks) {
                json one;
                one["check"] = check.label;
                one["ok"] = check.ok;
                checks.push_back(one);
            }
            json j;
            j["n"] = std::to_string(opt.n);
            j["checks"] = checks;
            j["verdict"] = rep.pass ? "pass" : "mismatch";
            emit(j);
        } else {
            for (const auto& check : rep.checks)
                std::printf("[%s] %s\n", check.ok ? "ok" : "FAIL", check.label.c_str());
            std::printf("verdict: %s\n", rep.pass ? "pass" : "mismatch");
        }
        return rep.pass ? kExitOk : kExitConjecture;
    }
    throw std::invalid_argument("slim: mode must be dim, char, verify-conjecture or verify-table");
}

int cmd_selftest(const Options& opt) {
    const int max_n = opt.max_n;
    int rc = kExitOk;
    std::printf("oracle-vs-formula characters, n <= %d:", max_n);
    std::fflush(stdout);
    for (int n = 1; n <= max_n; ++n)
        for (int c = 1; c <= n; ++c)
            for (const auto& lam : partitions_of(n))
                if (chi(n, c, lam) != brute_character(n, c, lam))
                    throw std::logic_error("selftest: character mismatch at n=" + std::to_string(n));
    std::printf(" ok\n");

    const int orbit_max = std::min(max_n, 7);
    std::printf("orbit formulas vs Burnside, n <= %d:", orbit_max);
    std::fflush(stdout);
    for (int n = 1; n <= orbit_max; ++n) {
        if (orbits_c1(n) != burnside_orbit_count(n, 1))
            throw std::logic_error("selftest: o_{n,1} mismatch");
        if (orbits_cn(n) != burnside_orbit_count(n, n))
            throw std::logic_error("selftest: o_{n,n} mismatch");
    }
    std::printf(" ok\n");

    std::printf("rational family vs oracles:");
    std::fflush(stdout);
    for (auto [a, b] : {std::pair{2, 3}, {3, 2}, {3, 4}, {5, 2}, {5, 3}, {5, 6}}) {
        for (const auto& lam : partitions_of(a + 1))
            if (chi_rational(a, b, lam) != brute_character_rational(a, b, 1, lam))
                throw std::logic_error("selftest: rational character mismatch");
        if (orbits_rational_c1(a, b) != burnside_orbit_count_rational(a, b, 1))
            throw std::logic_error("selftest: rational orbit mismatch");
    }
    std::printf(" ok\n");

    std::printf("number-theory identities:");
    std::fflush(stdout);
    for (long m = 1; m <= 200; ++m) {
        Int sum = 0;
        for (long d : divisors(m)) sum += jordan_totient2(d);
        if (sum != Int(m) * m) throw std::logic_error("selftest: Jordan totient sum mismatch");
    }
    for (long m = 1; m <= 100; ++m)
        for (long e = 1; e <= 10; ++e) F_of(m, e);
    for (int n = 1; n <= 10; ++n)
        if (!subset_sum_check(n)) throw std::logic_error("selftest: subset-sum mismatch");
    std::printf(" ok\n");

    std::printf("h-positivity of Frob(tau_{n,1}) (conjectured):\n");
    for (int n = 1; n <= std::max(max_n, 7); ++n) {
        const bool pos = is_h_positive(to_h(frobenius(character_vector(n, 1))));
        std::printf("  n=%d: %s\n", n, pos ? "h-positive" : "NOT h-positive (finding)");
        if (!pos) rc = kExitConjecture;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extended parking-function modules: characters, orbits, classification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) { sub->add_flag("--json", opt.json_out, "JSON output"); };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list PF_n, PF^_{n,c} or rational sets");
    enumerate->add_option("--n", opt.n, "length");
    enumerate->add_option("--c", opt.c, "target residue (selects the extended set)");
    enumerate->add_option("--a", opt.a, "rational parameter a");
    enumerate->add_option("--b", opt.b, "rational parameter b");
    add_common(enumerate);

    CLI::App* act = app.add_subcommand("act", "apply a permutation to an element of PF^_{n,c}");
    act->add_option("--n", opt.n)->required();
    act->add_option("--c", opt.c)->required();
    act->add_option("--perm", opt.perm, "one-line permutation, e.g. 1432")->required();
    act->add_option("--input", opt.input, "element, e.g. 0003")->required();
    add_common(act);

    CLI::App* chr = app.add_subcommand("char", "character of tau_{n,c}");
    chr->add_option("--n", opt.n)->required();
    chr->add_option("--c", opt.c)->required();
    chr->add_option("--lambda", opt.lambda, "cycle type, e.g. 3,3 (otherwise full vector)");
    add_common(chr);

    CLI::App* frob = app.add_subcommand("frob", "Frobenius characteristic of tau_{n,c}");
    frob->add_option("--n", opt.n)->required();
    frob->add_option("--c", opt.c)->required();
    frob->add_option("--basis", opt.basis, "p, h or s (default p)");
    add_common(frob);

    CLI::App* orb = app.add_subcommand("orbits", "orbit count of tau_{n,c}");
    orb->add_option("--n", opt.n)->required();
    orb->add_option("--c", opt.c)->required();
    orb->add_flag("--oracle", opt.oracle, "also run the Burnside oracle");
    orb->add_flag("--list", opt.list, "list the orbits");
    add_common(orb);

    CLI::App* orbr = app.add_subcommand("orbits-rational", "orbit count of tau_{a,b,1}");
    orbr->add_option("--a", opt.a)->required();
    orbr->add_option("--b", opt.b)->required();
    orbr->add_flag("--oracle", opt.oracle, "also run the Burnside oracle");
    add_common(orbr);

    CLI::App* cls = app.add_subcommand("classify", "isomorphism classes of the tau_{n,c}");
    cls->add_option("--n", opt.n)->required();
    add_common(cls);

    CLI::App* slim = app.add_subcommand("slim", "Berget-Rhoades space V_n");
    slim->add_option("--n", opt.n)->required();
    slim->add_option("mode", opt.mode, "dim | char | verify-conjecture | verify-table")->required();
    slim->add_flag("--allow-big", opt.allow_big, "allow the long n = 6 computation");
    add_common(slim);

    CLI::App* self = app.add_subcommand("selftest", "oracle-vs-formula suite");
    self->add_option("--max-n", opt.max_n, "largest n for brute-force checks (default 5)");
    add_common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (act->parsed()) return cmd_act(opt);
        if (chr->parsed()) return cmd_char(opt);
        if (frob->parsed()) return cmd_frob(opt);
        if (orb->parsed()) return cmd_orbits(opt);
        if (orbr->parsed()) return cmd_orbits_rational(opt);
        if (cls->parsed()) return cmd_classify(opt);
        if (slim->parsed()) return cmd_slim(opt);
        if (self->parsed()) return cmd_selftest(opt);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "assertion failure: %s\n", e.what());
        return kExitAssertion;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
