// Acceptance gate: end-to-end checks of the library's headline guarantees.
// Each criterion prints exactly one PASS/FAIL line; exit code is the number
// of failed criteria.

#include "solvpair/combinat.hpp"
#include "solvpair/io.hpp"
#include "solvpair/pair.hpp"
#include "solvpair/rng.hpp"
#include "solvpair/slice.hpp"
#include "solvpair/structure.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace solvpair;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// The five reference pairs used by the randomized suites: two weighted
// single-chain pairs, a generic two-chain pair, and two non-linear pairs.
std::vector<SolvablePair> reference_pairs() {
    std::vector<SolvablePair> out;
    out.push_back(canonical_pair({2}, {Rat(1)}));
    out.push_back(canonical_pair({3}, {make_rat(-2, 3)}));
    out.push_back(canonical_pair({2, 2}, {Rat(1), Rat(3)}));
    {
        Derivation d = Derivation::make({parse_poly(2, "1"), Poly(2)});
        Derivation g = Derivation::make({parse_poly(2, "X0"), parse_poly(2, "X1^2")});
        out.push_back(SolvablePair::validate(d, g));
    }
    {
        Derivation d = Derivation::make({parse_poly(3, "1"), Poly(3), Poly(3)});
        Derivation g = Derivation::make(
            {parse_poly(3, "X0"), parse_poly(3, "X1"), parse_poly(3, "2*X2")});
        out.push_back(SolvablePair::validate(d, g));
    }
    return out;
}

bool criterion_associativity(std::string& detail) {
    auto start = Clock::now();
    auto pairs = reference_pairs();
    Rng rng(101);
    int total = 0;
    for (const auto& p : pairs) {
        for (int c = 0; c < 200; ++c) {
            Poly f = random_poly(rng, p.nvars(), 3, 4);
            Poly g = random_poly(rng, p.nvars(), 3, 4);
            Poly h = random_poly(rng, p.nvars(), 3, 4);
            if (!(star(p, star(p, f, g), h) == star(p, f, star(p, g, h)))) {
                detail = "associativity broken";
                return false;
            }
            ++total;
        }
    }
    double dt = seconds_since(start);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d triples, %.2fs", total, dt);
    detail = buf;
    return dt < 60.0;
}

bool criterion_jacobi(std::string& detail) {
    auto start = Clock::now();
    auto pairs = reference_pairs();
    Rng rng(202);
    int total = 0;
    for (const auto& p : pairs) {
        for (int c = 0; c < 200; ++c) {
            Poly f = random_poly(rng, p.nvars(), 3, 3);
            Poly g = random_poly(rng, p.nvars(), 3, 3);
            Poly h = random_poly(rng, p.nvars(), 3, 3);
            Poly j = bracket(p, f, bracket(p, g, h)) + bracket(p, g, bracket(p, h, f)) +
                     bracket(p, h, bracket(p, f, g));
            if (!j.is_zero()) {
                detail = "jacobi identity broken";
                return false;
            }
            ++total;
        }
    }
    double dt = seconds_since(start);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d triples, %.2fs", total, dt);
    detail = buf;
    return dt < 30.0;
}

bool criterion_semiclassical(std::string& detail) {
    auto pairs = reference_pairs();
    Rng rng(303);
    int total = 0;
    for (const auto& p : pairs) {
        for (int c = 0; c < 20; ++c) {
            Poly f = random_poly(rng, p.nvars(), 3, 3);
            Poly g = random_poly(rng, p.nvars(), 3, 3);
            Poly order1 = star_t(p, f, g).t_coeff(1) - star_t(p, g, f).t_coeff(1);
            if (!(order1 == bracket(p, f, g))) {
                detail = "first-order term differs from bracket";
                return false;
            }
            Poly rem = star(p, f, g) - star(p, g, f) - bracket(p, f, g);
            auto er = epsilon(p, rem);
            auto ef = epsilon(p, f);
            auto eg = epsilon(p, g);
            if (er) {
                if (!ef || !eg || *er > *ef + *eg - 2) {
                    detail = "filtration bound violated";
                    return false;
                }
            }
            ++total;
        }
    }
    detail = std::to_string(total) + " pairs";
    return true;
}

bool criterion_exponential(std::string& detail) {
    auto pairs = reference_pairs();
    Rng rng(404);
    // (id + delta) multiplies star products; its logarithm differentiates them.
    for (const auto& p : pairs) {
        for (int c = 0; c < 20; ++c) {
            Poly f = random_poly(rng, p.nvars(), 3, 3);
            Poly g = random_poly(rng, p.nvars(), 3, 3);
            Poly sf = f + apply(p.delta(), f);
            Poly sg = g + apply(p.delta(), g);
            Poly prod = star(p, f, g);
            if (!(star(p, sf, sg) == prod + apply(p.delta(), prod))) {
                detail = "shift map is not a product automorphism";
                return false;
            }
            Poly lf = log_delta(p, f);
            Poly lg = log_delta(p, g);
            if (!(log_delta(p, prod) == star(p, lf, g) + star(p, f, lg))) {
                detail = "logarithm is not a product derivation";
                return false;
            }
        }
    }
    const auto& p = pairs[2];
    Rng arng(405);
    for (int c = 0; c < 20; ++c) {
        Rat a = make_rat(arng.range(-6, 6), arng.range(1, 5));
        Rat b = make_rat(arng.range(-6, 6), arng.range(1, 5));
        Poly f = random_poly(arng, p.nvars(), 3, 3);
        if (!(phi(p, a, phi(p, b, f)) == phi(p, a + b, f))) {
            detail = "one-parameter group law broken";
            return false;
        }
    }
    detail = "100 products per identity, 20 parameter pairs";
    return true;
}

bool criterion_pder_table(std::string& detail) {
    auto start = Clock::now();
    struct Row {
        SolvablePair pair;
        int expected;
    };
    std::vector<Row> rows;
    rows.push_back({canonical_pair({3}, {Rat(1)}), 2});
    rows.push_back({canonical_pair({4}, {Rat(1)}), 2});
    rows.push_back({canonical_pair({5}, {Rat(1)}), 2});
    rows.push_back({canonical_pair({2, 2}, {Rat(1), Rat(3)}), 3});
    rows.push_back({canonical_pair({2, 1}, {Rat(1), Rat(4)}), 4});
    rows.push_back({canonical_pair({2, 1, 1}, {Rat(1), Rat(4), Rat(6)}), 6});
    rows.push_back({canonical_pair({1, 1, 1}, {Rat(1), Rat(2), Rat(4)}), 9});
    {
        Derivation d = Derivation::make({Poly(3), parse_poly(3, "X0"), Poly(3)});
        Derivation g = Derivation::make(
            {parse_poly(3, "X0"), parse_poly(3, "2*X1"), parse_poly(3, "X0 + X2")});
        rows.push_back({SolvablePair::validate(d, g), 4});
    }
    {
        Derivation d = Derivation::make({Poly(3), parse_poly(3, "X0"), Poly(3)});
        Derivation g = Derivation::make({Poly(3), parse_poly(3, "X1"), parse_poly(3, "X0")});
        rows.push_back({SolvablePair::validate(d, g), 6});
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        PDerSpace sp = pder_basis(rows[i].pair);
        if (sp.dim() != rows[i].expected) {
            detail = "row " + std::to_string(i) + ": dim " + std::to_string(sp.dim()) +
                     " != " + std::to_string(rows[i].expected);
            return false;
        }
    }
    double dt = seconds_since(start);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu rows, %.2fs", rows.size(), dt);
    detail = buf;
    return dt < 60.0;
}

bool criterion_unimodular(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        Rat a = make_rat(-(n + 2) * (n - 1), 2 * (n + 1));
        SolvablePair p = canonical_pair({n + 1}, {a});
        Derivation m = modular_derivation(p);
        StructureReport rep = structure_report(p);
        bool zero = true;
        for (const auto& img : m.images) zero = zero && img.is_zero();
        if (!zero || rep.trace != Rat(1) || !rep.unimodular || !rep.calabi_yau) {
            detail = "balanced weight n=" + std::to_string(n) + " not unimodular";
            return false;
        }
        SolvablePair q = canonical_pair({n + 1}, {a + make_rat(1, 7)});
        Derivation mq = modular_derivation(q);
        StructureReport rq = structure_report(q);
        bool qzero = true;
        for (const auto& img : mq.images) qzero = qzero && img.is_zero();
        if (qzero || rq.trace == Rat(1) || rq.unimodular || rq.calabi_yau) {
            detail = "perturbed weight n=" + std::to_string(n) + " still unimodular";
            return false;
        }
    }
    detail = "3 balanced weights, 3 perturbations";
    return true;
}

bool criterion_determinant(std::string& detail) {
    std::vector<Rat> values = {Rat(1), Rat(-1), Rat(3), make_rat(2, 5)};
    for (int n = 1; n <= 6; ++n) {
        for (const Rat& a : values) {
            Rat expected = rat_pow(a, n * (n + 1) / 2);
            if (det(binom_matrix(a, n)) != expected) {
                detail = "determinant formula broken at n=" + std::to_string(n);
                return false;
            }
        }
    }
    // Reconstruction: the solved coefficients rebuild the derivation from its
    // one-parameter group on everything the derivation kills in 3 steps.
    SolvablePair p = canonical_pair({3}, {make_rat(5, 3)});
    Rat a = make_rat(5, 3);
    int n = 2;
    std::vector<Rat> alpha = binom_solve(a, n);
    Rng rng(707);
    std::vector<std::array<int, 3>> low = {
        {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {0, 1, 0},
        {1, 1, 0}, {2, 1, 0}, {0, 2, 0}, {0, 0, 1}, {1, 0, 1}};
    for (int c = 0; c < 20; ++c) {
        Poly f = Poly(3);
        for (int t = 0; t < 4; ++t) {
            const auto& e = low[rng.range(0, static_cast<int>(low.size()) - 1)];
            f = f + Poly::monomial(3, {e[0], e[1], e[2]}, rng.small_coeff());
        }
        auto ef = epsilon(p, f);
        if (ef && *ef > n) {
            detail = "sample outside filtration window";
            return false;
        }
        Poly sum = Poly(3);
        for (int k = 0; k <= n; ++k) sum = sum + alpha[k] * phi(p, Rat(k) * a, f);
        if (!(sum == apply(p.delta(), f))) {
            detail = "group-to-derivation reconstruction broken";
            return false;
        }
    }
    detail = "24 determinants, 20 reconstructions";
    return true;
}

bool criterion_presentation(std::string& detail) {
    SolvablePair p = canonical_pair({2, 2}, {Rat(1), Rat(3)});
    std::vector<Relation> rels = relations(p, jordan_reduce(p));  // throws if any relation fails
    if (rels.size() != 6) {
        detail = "expected 6 straightening relations, got " + std::to_string(rels.size());
        return false;
    }
    for (const auto& r : rels) {
        Poly lhs = Poly(p.nvars());
        Poly rhs = Poly(p.nvars());
        for (const auto& w : r.lhs)
            lhs = lhs + w.coef * star(p, Poly::variable(p.nvars(), w.left),
                                      Poly::variable(p.nvars(), w.right));
        for (const auto& w : r.rhs)
            rhs = rhs + w.coef * star(p, Poly::variable(p.nvars(), w.left),
                                      Poly::variable(p.nvars(), w.right));
        if (!(lhs == rhs)) {
            detail = "relation does not hold under the product";
            return false;
        }
    }
    std::vector<int> expected = {1, 4, 10, 20, 35};
    for (int d = 0; d <= 4; ++d) {
        if (star_monomial_rank(p, d) != expected[d]) {
            detail = "ordered-monomial rank wrong at degree " + std::to_string(d);
            return false;
        }
    }
    if (!hilbert_check(p, 4)) {
        detail = "dimension count mismatch";
        return false;
    }
    detail = "6 relations, ranks 1,4,10,20,35";
    return true;
}

bool criterion_normal(std::string& detail) {
    SolvablePair p = canonical_pair({3}, {Rat(0)});
    auto spaces = strongly_normal_space(p, 2);
    Poly casimir = Rat(2) * Poly::variable(3, 0) * Poly::variable(3, 2) -
                   Poly::variable(3, 1) * Poly::variable(3, 1);
    bool found = false;
    for (const auto& sp : spaces) {
        if (sp.eigenvalue != Rat(2)) continue;
        for (const auto& b : sp.basis) {
            if (b == casimir || b == Rat(-1) * casimir) found = true;
        }
    }
    if (!found) {
        detail = "quadratic invariant not reported with weight 2";
        return false;
    }
    int checked = 0;
    for (const auto& q : reference_pairs()) {
        for (int d = 1; d <= 2; ++d) {
            for (const auto& sp : strongly_normal_space(q, d)) {
                for (const auto& b : sp.basis) {
                    check_strongly_normal_behavior(q, b, sp.eigenvalue, 3);
                    ++checked;
                }
            }
        }
    }
    detail = "quadratic invariant found, " + std::to_string(checked) + " elements certified";
    return true;
}

bool criterion_slice(std::string& detail) {
    SolvablePair p = canonical_pair({3}, {Rat(1)});
    SliceContext c = localize(p, Poly::variable(3, 1));
    LocalizedElem ds = loc_apply(c, p.delta(), c.s);
    if (!(ds.is_poly() && ds.to_poly() == Poly::constant(3, Rat(1)))) {
        detail = "slice element is not a unit section of the derivation";
        return false;
    }
    Rng rng(808);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_poly(rng, 3, 3, 3);
        Poly g = random_poly(rng, 3, 3, 3);
        LocalizedElem pf = dixmier_pi(c, f);
        LocalizedElem pg = dixmier_pi(c, g);
        if (!(dixmier_pi(c, f * g) == pf * pg)) {
            detail = "projection is not multiplicative";
            return false;
        }
        if (!(dixmier_pi(c, pf) == pf)) {
            detail = "projection is not idempotent";
            return false;
        }
        if (!loc_apply(c, p.delta(), pf).is_zero()) {
            detail = "projection image not annihilated";
            return false;
        }
        if (!(dixmier_pi(c, apply(p.gamma(), f)) == loc_apply(c, p.gamma(), pf))) {
            detail = "projection does not commute with the weight map";
            return false;
        }
    }
    ore_check(c, 3);  // throws on failure
    auto gens = kernel_generators(c);
    std::vector<Rat> nonzero_evs;
    for (const auto& g : gens) {
        if (!g.y.is_zero()) nonzero_evs.push_back(g.lambda);
    }
    if (nonzero_evs.size() != 2 || nonzero_evs[0] != Rat(1) || nonzero_evs[1] != Rat(3)) {
        detail = "invariant generators have wrong weights";
        return false;
    }
    detail = "50 projections, reordering law, generator weights 1,3";
    return true;
}

bool criterion_center(std::string& detail) {
    auto pairs = reference_pairs();
    for (const auto& p : pairs) {
        for (int d = 1; d <= 3; ++d) {
            auto zs = center(p, d, false);
            auto zp = center(p, d, true);
            auto kk = kernel_intersection(p, d);
            if (zs.size() != kk.size() || zp.size() != kk.size()) {
                detail = "center dimension differs from joint kernel";
                return false;
            }
            auto basis = monomial_basis_upto(p.nvars(), d);
            std::size_t dim = basis.size();
            auto index_of = [&](const std::vector<int>& m) {
                for (std::size_t i = 0; i < dim; ++i)
                    if (basis[i] == m) return i;
                return dim;
            };
            auto to_vec = [&](const Poly& f) {
                std::vector<Rat> v(dim, Rat(0));
                for (const auto& [m, cf] : f.terms()) v[index_of(m)] = cf;
                return v;
            };
            IncrementalSpan span(static_cast<int>(dim));
            for (const auto& f : kk) span.add(to_vec(f));
            for (const auto& f : zs)
                if (!span.contains(to_vec(f))) {
                    detail = "product center escapes the joint kernel";
                    return false;
                }
            for (const auto& f : zp)
                if (!span.contains(to_vec(f))) {
                    detail = "bracket center escapes the joint kernel";
                    return false;
                }
        }
    }
    SolvablePair comm = canonical_pair({2}, {Rat(0)});
    auto z = center(comm, 3, false);
    if (z.size() != monomial_basis_upto(2, 3).size()) {
        detail = "commutative pair center is not everything";
        return false;
    }
    detail = "5 pairs x 3 degrees, commutative center full";
    return true;
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) {
        status = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    status = (rc == -1) ? -1 : WEXITSTATUS(rc);
    return out;
}

bool criterion_cli(std::string& detail) {
    const char* cli = std::getenv("SOLVPAIR_CLI");
    const char* fix = std::getenv("SOLVPAIR_FIXTURES");
    if (!cli || !fix) {
        detail = "SOLVPAIR_CLI / SOLVPAIR_FIXTURES not set";
        return false;
    }
    std::string report_cmd =
        std::string(cli) + " report " + fix + "/unimodular22.json --json";
    int s1 = 0, s2 = 0;
    std::string r1 = run_capture(report_cmd, s1);
    std::string r2 = run_capture(report_cmd, s2);
    if (s1 != 0 || s2 != 0 || r1.empty() || r1 != r2) {
        detail = "report output not reproducible";
        return false;
    }
    if (r1.find("\"unimodular\": true") == std::string::npos) {
        detail = "report misses unimodular flag";
        return false;
    }
    std::string self_cmd = std::string(cli) + " selftest --seed 9 --cases 3";
    std::string t1 = run_capture(self_cmd, s1);
    std::string t2 = run_capture(self_cmd, s2);
    if (s1 != 0 || s2 != 0 || t1.empty() || t1 != t2) {
        detail = "selftest output not reproducible";
        return false;
    }
    detail = "report and selftest byte-identical across runs";
    return true;
}

}  // namespace

int main() {
    struct Item {
        const char* name;
        std::function<bool(std::string&)> fn;
    };
    std::vector<Item> items = {
        {"star associativity", criterion_associativity},
        {"jacobi identity", criterion_jacobi},
        {"semiclassical limit", criterion_semiclassical},
        {"shift automorphism and logarithm", criterion_exponential},
        {"poisson derivation table", criterion_pder_table},
        {"unimodularity and calabi-yau", criterion_unimodular},
        {"binomial determinant and reconstruction", criterion_determinant},
        {"presentation and dimension count", criterion_presentation},
        {"strongly normal elements", criterion_normal},
        {"slice and projection", criterion_slice},
        {"center computation", criterion_center},
        {"cli determinism", criterion_cli},
    };
    int failed = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = items[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << items[i].name << " (" << detail << ")" << std::endl;
        if (!ok) ++failed;
    }
    if (failed == 0) {
        std::cout << "all " << items.size() << " criteria passed" << std::endl;
    } else {
        std::cout << failed << " criteria failed" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
