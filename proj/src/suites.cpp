#include "msm/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <utility>

#include "msm/assignment.hpp"
#include "msm/json_io.hpp"
#include "msm/l1_multiset.hpp"
#include "msm/multiset.hpp"
#include "msm/quotient.hpp"
#include "msm/rng.hpp"
#include "msm/signed_multiset.hpp"

namespace msm {

namespace {

// Slack for identities that hold at straight formula precision (no tolerance
// knob): isometric embeddings, ground triangle inequalities, and interval
// enclosures.  These identities are exact in real arithmetic; 1e-12 absorbs
// summation-order round-off while staying three orders of magnitude below the
// default solver tolerance.
constexpr double kExactSlack = 1e-12;

// ---------------------------------------------------------------------------
// Failure bookkeeping
// ---------------------------------------------------------------------------

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    // Records one property check; the counterexample closure runs only for
    // the first failure.
    bool expect(bool ok, const std::function<Json()>& counterexample) {
        ++result_.checks;
        if (!ok) {
            if (result_.failures == 0) result_.counterexample = counterexample().dump();
            ++result_.failures;
        }
        return ok;
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

// ---------------------------------------------------------------------------
// Random model sampling
// ---------------------------------------------------------------------------

const std::vector<std::string>& discrete_label_pool() {
    static const std::vector<std::string> pool = {"e", "a", "b", "c", "d"};
    return pool;
}

// A finite-matrix space built from distinct points on a quarter-integer grid
// with l1 distances.  Every entry is an exact multiple of 0.25, so the metric
// validation (including all triangle inequalities) is free of round-off and
// can never spuriously reject a sample.
GroundSpacePtr sample_matrix_space(Rng& rng) {
    const std::size_t count = static_cast<std::size_t>(rng.uniform_int(2, 5));
    std::vector<std::array<double, 2>> points;
    while (points.size() < count) {
        const std::array<double, 2> p = {0.25 * static_cast<double>(rng.uniform_int(-16, 16)),
                                         0.25 * static_cast<double>(rng.uniform_int(-16, 16))};
        if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::vector<std::vector<double>> matrix(count, std::vector<double>(count, 0.0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            matrix[i][j] =
                std::fabs(points[i][0] - points[j][0]) + std::fabs(points[i][1] - points[j][1]);
        }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < count; ++i) labels.push_back("p" + std::to_string(i));
    return GroundSpace::finite_matrix(std::move(matrix), std::move(labels), Element("p0"));
}

// Rotates through every ground-metric kind.
GroundSpacePtr sample_space(Rng& rng) {
    switch (rng.uniform_int(0, 4)) {
        case 0: return GroundSpace::euclidean(1, Element({0.0}));
        case 1: return GroundSpace::euclidean(2, Element({0.0, 0.0}));
        case 2: return GroundSpace::l1(3, Element({0.0, 0.0, 0.0}));
        case 3: return GroundSpace::discrete(Element("e"));
        default: return sample_matrix_space(rng);
    }
}

Element sample_element(Rng& rng, const GroundSpace& space) {
    switch (space.kind()) {
        case MetricKind::Euclidean:
        case MetricKind::L1: {
            Element::Coords coords;
            coords.reserve(space.dimension());
            for (std::size_t i = 0; i < space.dimension(); ++i) {
                coords.push_back(rng.uniform_double(-10.0, 10.0));
            }
            return Element(std::move(coords));
        }
        case MetricKind::Discrete: {
            const auto& pool = discrete_label_pool();
            return Element(pool[rng.uniform_index(pool.size())]);
        }
        case MetricKind::FiniteMatrix:
            return Element(space.labels()[rng.uniform_index(space.labels().size())]);
    }
    return space.basepoint();
}

Element sample_nonbase_element(Rng& rng, const GroundSpace& space) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Element x = sample_element(rng, space);
        if (x != space.basepoint()) return x;
    }
    throw ValidationError("could not sample an element distinct from the basepoint");
}

// Random multiset of expanded size at most max_size; repeats earlier elements
// with probability 1/4 so multiplicities above one actually occur, and may
// include the basepoint (which canonicalization then drops).
Multiset sample_multiset(Rng& rng, const GroundSpacePtr& space, std::int64_t max_size) {
    const std::int64_t target = rng.uniform_int(0, max_size);
    std::vector<Multiset::Entry> entries;
    std::vector<Element> chosen;
    for (std::int64_t i = 0; i < target; ++i) {
        if (!chosen.empty() && rng.bernoulli(0.25)) {
            entries.emplace_back(chosen[rng.uniform_index(chosen.size())], 1);
        } else {
            Element x = sample_element(rng, *space);
            chosen.push_back(x);
            entries.emplace_back(std::move(x), 1);
        }
    }
    return Multiset::canonicalize(space, entries);
}

// Random signed multiset with at most max_support support points and
// coefficients in {-2,-1,1,2}.
SignedMultiset sample_signed(Rng& rng, const GroundSpacePtr& space, std::int64_t max_support) {
    const std::int64_t support = rng.uniform_int(0, max_support);
    std::vector<SignedMultiset::Entry> entries;
    for (std::int64_t i = 0; i < support; ++i) {
        const std::int64_t magnitude = rng.uniform_int(1, 2);
        entries.emplace_back(sample_element(rng, *space),
                             rng.bernoulli(0.5) ? magnitude : -magnitude);
    }
    return SignedMultiset::canonicalize(space, entries);
}

std::vector<Element> sample_distinct_elements(Rng& rng, const GroundSpace& space,
                                              std::size_t minimum, std::size_t maximum) {
    const std::size_t target =
        static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(minimum),
                                                 static_cast<std::int64_t>(maximum)));
    std::vector<Element> out;
    for (int attempt = 0; attempt < 400 && out.size() < target; ++attempt) {
        Element x = sample_element(rng, space);
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
    if (out.size() < minimum) {
        throw ValidationError("could not sample enough distinct elements");
    }
    return out;
}

QuotientSpace sample_quotient(Rng& rng, std::size_t min_subset) {
    GroundSpacePtr space = sample_space(rng);
    auto subset = sample_distinct_elements(rng, *space, min_subset, 4);
    return QuotientSpace(std::move(space), std::move(subset));
}

CostMatrix sample_cost_matrix(Rng& rng, std::size_t n, double max_entry) {
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(rng.uniform_double(0.0, max_entry));
    return CostMatrix(n, std::move(entries));
}

Json matrix_to_json(const CostMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

double permutation_cost(const CostMatrix& m, const std::vector<std::size_t>& perm) {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += m.at(i, perm[i]);
    return total;
}

// ---------------------------------------------------------------------------
// Ground-metric suites
// ---------------------------------------------------------------------------

SuiteResult suite_ground_metric_axioms(const SuiteConfig& cfg) {
    Recorder rec("ground_metric_axioms");
    Rng rng(cfg.seed, "ground_metric_axioms");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Element p = sample_element(rng, *space);
        const Element q = sample_element(rng, *space);
        const Element r = sample_element(rng, *space);
        const double dpq = dist(*space, p, q);
        const double dqp = dist(*space, q, p);
        const double dpr = dist(*space, p, r);
        const double dqr = dist(*space, q, r);
        auto dump = [&](const char* check) {
            return Json{{"check", check},     {"space", to_json(*space)}, {"p", to_json(p)},
                        {"q", to_json(q)},    {"r", to_json(r)},          {"d_pq", dpq},
                        {"d_qp", dqp},        {"d_pr", dpr},              {"d_qr", dqr}};
        };
        rec.expect(dpq >= 0.0, [&] { return dump("nonnegative"); });
        rec.expect(dpq == dqp, [&] { return dump("symmetry"); });
        rec.expect(dpr <= dpq + dqr + kExactSlack, [&] { return dump("triangle"); });
        rec.expect((dpq == 0.0) == (p == q), [&] { return dump("zero_iff_equal_keys"); });
    }
    return rec.take();
}

SuiteResult suite_ground_subset_triangle(const SuiteConfig& cfg) {
    Recorder rec("ground_subset_triangle");
    Rng rng(cfg.seed, "ground_subset_triangle");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Element p = sample_element(rng, *space);
        const Element q = sample_element(rng, *space);
        const auto subset = sample_distinct_elements(rng, *space, 1, 4);
        const double dp = dist_to_set(*space, p, subset);
        const double dq = dist_to_set(*space, q, subset);
        const double dpq = dist(*space, p, q);
        rec.expect(dp <= dpq + dq + kExactSlack, [&] {
            Json h = Json::array();
            for (const auto& x : subset) h.push_back(to_json(x));
            return Json{{"check", "subset_triangle"},
                        {"space", to_json(*space)},
                        {"p", to_json(p)},
                        {"q", to_json(q)},
                        {"H", std::move(h)},
                        {"d_pH", dp},
                        {"d_pq", dpq},
                        {"d_qH", dq}};
        });
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Assignment-solver suites
// ---------------------------------------------------------------------------

SuiteResult suite_assign_oracle_equivalence(const SuiteConfig& cfg) {
    Recorder rec("assign_oracle_equivalence");
    Rng rng(cfg.seed, "assign_oracle_equivalence");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 7));
        const CostMatrix m = sample_cost_matrix(rng, n, 10.0);
        const double fast = solve_assignment(m, cfg.solver_size_cap).total_cost;
        const double exact = brute_force_assignment(m).total_cost;
        rec.expect(std::fabs(fast - exact) <= cfg.tolerance_abs, [&] {
            return Json{{"check", "oracle_equivalence"},
                        {"matrix", matrix_to_json(m)},
                        {"solver_cost", fast},
                        {"brute_force_cost", exact}};
        });
    }
    return rec.take();
}

SuiteResult suite_assign_permutation_validity(const SuiteConfig& cfg) {
    Recorder rec("assign_permutation_validity");
    Rng rng(cfg.seed, "assign_permutation_validity");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 20));
        const CostMatrix m = sample_cost_matrix(rng, n, 10.0);
        const Assignment result = solve_assignment(m, cfg.solver_size_cap);
        bool valid = result.row_to_col.size() == n;
        if (valid) {
            std::vector<bool> seen(n, false);
            for (const std::size_t col : result.row_to_col) {
                if (col >= n || seen[col]) {
                    valid = false;
                    break;
                }
                seen[col] = true;
            }
        }
        rec.expect(valid, [&] {
            return Json{{"check", "permutation_validity"},
                        {"matrix", matrix_to_json(m)},
                        {"row_to_col", result.row_to_col}};
        });
    }
    return rec.take();
}

SuiteResult suite_assign_scale_equivariance(const SuiteConfig& cfg) {
    Recorder rec("assign_scale_equivariance");
    Rng rng(cfg.seed, "assign_scale_equivariance");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 7));
        const CostMatrix m = sample_cost_matrix(rng, n, 10.0);
        const double lambda = rng.uniform_double(0.1, 10.0);
        std::vector<double> scaled_entries;
        scaled_entries.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) scaled_entries.push_back(lambda * m.at(r, c));
        }
        const CostMatrix scaled(n, std::move(scaled_entries));
        const Assignment base = solve_assignment(m, cfg.solver_size_cap);
        const Assignment after = solve_assignment(scaled, cfg.solver_size_cap);
        const double slack = cfg.tolerance_abs * std::max(1.0, std::fabs(lambda * base.total_cost));
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"matrix", matrix_to_json(m)},
                        {"lambda", lambda},
                        {"base_cost", base.total_cost},
                        {"scaled_cost", after.total_cost}};
        };
        rec.expect(std::fabs(after.total_cost - lambda * base.total_cost) <= slack,
                   [&] { return dump("scaled_cost"); });
        // The unscaled optimum must stay optimal on the scaled matrix.
        rec.expect(permutation_cost(scaled, base.row_to_col) <= after.total_cost + slack,
                   [&] { return dump("optimal_permutation_preserved"); });
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Multiset-distance suites
// ---------------------------------------------------------------------------

SuiteResult suite_nmultiset_identity(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_identity");
    Rng rng(cfg.seed, "nmultiset_identity");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const double daa = matching_distance(a, a, cfg.solver_size_cap);
        const double dab = matching_distance(a, b, cfg.solver_size_cap);
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"d_aa", daa},
                        {"d_ab", dab}};
        };
        rec.expect(daa == 0.0, [&] { return dump("self_distance_zero"); });
        rec.expect(dab != 0.0 || a == b, [&] { return dump("zero_implies_equal"); });
    }
    return rec.take();
}

SuiteResult suite_nmultiset_symmetry(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_symmetry");
    Rng rng(cfg.seed, "nmultiset_symmetry");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const double dab = matching_distance(a, b, cfg.solver_size_cap);
        const double dba = matching_distance(b, a, cfg.solver_size_cap);
        rec.expect(dab == dba, [&] {
            return Json{{"check", "symmetry"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"d_ab", dab},
                        {"d_ba", dba}};
        });
    }
    return rec.take();
}

SuiteResult suite_nmultiset_triangle(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_triangle");
    Rng rng(cfg.seed, "nmultiset_triangle");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const Multiset c = sample_multiset(rng, space, 6);
        const double dac = matching_distance(a, c, cfg.solver_size_cap);
        const double dab = matching_distance(a, b, cfg.solver_size_cap);
        const double dbc = matching_distance(b, c, cfg.solver_size_cap);
        rec.expect(dac <= dab + dbc + cfg.tolerance_abs, [&] {
            return Json{{"check", "triangle"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"c", to_json(c)},
                        {"d_ac", dac},
                        {"d_ab", dab},
                        {"d_bc", dbc}};
        });
    }
    return rec.take();
}

SuiteResult suite_nmultiset_padding_invariance(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_padding_invariance");
    Rng rng(cfg.seed, "nmultiset_padding_invariance");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const std::size_t m = static_cast<std::size_t>(a.total_size());
        const std::size_t n = static_cast<std::size_t>(b.total_size());
        const std::size_t low = std::max<std::size_t>(std::max(m, n), 1);
        const double reference = matching_distance_padded(a, b, low, cfg.solver_size_cap);
        for (std::size_t pad = low + 1; pad <= m + n + 5; ++pad) {
            const double value = matching_distance_padded(a, b, pad, cfg.solver_size_cap);
            rec.expect(std::fabs(value - reference) <= cfg.tolerance_abs, [&] {
                return Json{{"check", "padding_invariance"},
                            {"space", to_json(*space)},
                            {"a", to_json(a)},
                            {"b", to_json(b)},
                            {"n_padded", pad},
                            {"value", value},
                            {"reference", reference}};
            });
        }
    }
    return rec.take();
}

SuiteResult suite_nmultiset_lipschitz_addition(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_lipschitz_addition");
    Rng rng(cfg.seed, "nmultiset_lipschitz_addition");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset a2 = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const Multiset b2 = sample_multiset(rng, space, 6);
        const double sum_distance = matching_distance(add(a, b), add(a2, b2), cfg.solver_size_cap);
        const double da = matching_distance(a, a2, cfg.solver_size_cap);
        const double db = matching_distance(b, b2, cfg.solver_size_cap);
        rec.expect(sum_distance <= da + db + cfg.tolerance_abs, [&] {
            return Json{{"check", "lipschitz_addition"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"a2", to_json(a2)},
                        {"b", to_json(b)},
                        {"b2", to_json(b2)},
                        {"d_sum", sum_distance},
                        {"d_a", da},
                        {"d_b", db}};
        });
    }
    return rec.take();
}

SuiteResult suite_nmultiset_cancellation(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_cancellation");
    Rng rng(cfg.seed, "nmultiset_cancellation");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const Multiset c = sample_multiset(rng, space, 6);
        const double plain = matching_distance(a, b, cfg.solver_size_cap);
        const double shifted = matching_distance(add(a, c), add(b, c), cfg.solver_size_cap);
        rec.expect(std::fabs(plain - shifted) <= cfg.tolerance_abs, [&] {
            return Json{{"check", "cancellation"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"c", to_json(c)},
                        {"d_ab", plain},
                        {"d_shifted", shifted}};
        });
    }
    return rec.take();
}

SuiteResult suite_nmultiset_embedding_isometry(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_embedding_isometry");
    Rng rng(cfg.seed, "nmultiset_embedding_isometry");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Element x = sample_element(rng, *space);
        const Element y = sample_element(rng, *space);
        const double ground = dist(*space, x, y);
        const double lifted =
            matching_distance(embed_point(space, x), embed_point(space, y), cfg.solver_size_cap);
        rec.expect(std::fabs(lifted - ground) <= kExactSlack, [&] {
            return Json{{"check", "point_embedding_isometry"},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"ground", ground},
                        {"lifted", lifted}};
        });
    }
    return rec.take();
}

SuiteResult suite_nmultiset_restriction_equal_size(const SuiteConfig& cfg) {
    Recorder rec("nmultiset_restriction_equal_size");
    Rng rng(cfg.seed, "nmultiset_restriction_equal_size");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const std::size_t k = static_cast<std::size_t>(rng.uniform_int(1, 5));
        std::vector<Multiset::Entry> ea, eb;
        for (std::size_t j = 0; j < k; ++j) {
            ea.emplace_back(sample_nonbase_element(rng, *space), 1);
            eb.emplace_back(sample_nonbase_element(rng, *space), 1);
        }
        const Multiset a = Multiset::canonicalize(space, ea);
        const Multiset b = Multiset::canonicalize(space, eb);
        // Both multisets have exactly k expanded elements; the padded distance
        // must agree with the unpadded minimum over S_k.
        const std::vector<Element> ax = make_padded_list(a, k).elements;
        const std::vector<Element> bx = make_padded_list(b, k).elements;
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        do {
            double total = 0.0;
            for (std::size_t j = 0; j < k; ++j) total += dist(*space, ax[j], bx[perm[j]]);
            best = std::min(best, total);
        } while (std::next_permutation(perm.begin(), perm.end()));
        const double padded = matching_distance(a, b, cfg.solver_size_cap);
        rec.expect(std::fabs(padded - best) <= cfg.tolerance_abs, [&] {
            return Json{{"check", "restriction_equal_size"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"padded", padded},
                        {"unpadded_brute_force", best}};
        });
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Signed-multiset (group metric) suites
// ---------------------------------------------------------------------------

SuiteResult suite_zgroup_identity(const SuiteConfig& cfg) {
    Recorder rec("zgroup_identity");
    Rng rng(cfg.seed, "zgroup_identity");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const double dxx = group_distance(x, x, cfg.solver_size_cap);
        const double dxy = group_distance(x, y, cfg.solver_size_cap);
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"d_xx", dxx},
                        {"d_xy", dxy}};
        };
        rec.expect(dxx == 0.0, [&] { return dump("self_distance_zero"); });
        rec.expect(dxy != 0.0 || x == y, [&] { return dump("zero_implies_equal"); });
    }
    return rec.take();
}

SuiteResult suite_zgroup_symmetry(const SuiteConfig& cfg) {
    Recorder rec("zgroup_symmetry");
    Rng rng(cfg.seed, "zgroup_symmetry");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const double dxy = group_distance(x, y, cfg.solver_size_cap);
        const double dyx = group_distance(y, x, cfg.solver_size_cap);
        rec.expect(dxy == dyx, [&] {
            return Json{{"check", "symmetry"},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"d_xy", dxy},
                        {"d_yx", dyx}};
        });
    }
    return rec.take();
}

SuiteResult suite_zgroup_triangle(const SuiteConfig& cfg) {
    Recorder rec("zgroup_triangle");
    Rng rng(cfg.seed, "zgroup_triangle");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const SignedMultiset z = sample_signed(rng, space, 4);
        const double dxz = group_distance(x, z, cfg.solver_size_cap);
        const double dxy = group_distance(x, y, cfg.solver_size_cap);
        const double dyz = group_distance(y, z, cfg.solver_size_cap);
        rec.expect(dxz <= dxy + dyz + cfg.tolerance_abs, [&] {
            return Json{{"check", "triangle"},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"z", to_json(z)},
                        {"d_xz", dxz},
                        {"d_xy", dxy},
                        {"d_yz", dyz}};
        });
    }
    return rec.take();
}

SuiteResult suite_zgroup_inflation_invariance(const SuiteConfig& cfg) {
    Recorder rec("zgroup_inflation_invariance");
    Rng rng(cfg.seed, "zgroup_inflation_invariance");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const Multiset w = sample_multiset(rng, space, 4);
        const double canonical = group_distance(x, y, cfg.solver_size_cap);
        // Same group element, non-canonical decomposition x = (x+ + w) - (x- + w).
        const double inflated = matching_distance(add(add(pos_part(x), w), neg_part(y)),
                                                  add(pos_part(y), add(neg_part(x), w)),
                                                  cfg.solver_size_cap);
        rec.expect(std::fabs(canonical - inflated) <= cfg.tolerance_abs, [&] {
            return Json{{"check", "inflation_invariance"},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"w", to_json(w)},
                        {"canonical", canonical},
                        {"inflated", inflated}};
        });
    }
    return rec.take();
}

SuiteResult suite_zgroup_translation_invariance(const SuiteConfig& cfg) {
    Recorder rec("zgroup_translation_invariance");
    Rng rng(cfg.seed, "zgroup_translation_invariance");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const SignedMultiset z = sample_signed(rng, space, 4);
        const double plain = group_distance(x, y, cfg.solver_size_cap);
        const double translated =
            group_distance(group_add(x, z), group_add(y, z), cfg.solver_size_cap);
        rec.expect(std::fabs(plain - translated) <= cfg.tolerance_abs, [&] {
            return Json{{"check", "translation_invariance"},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"z", to_json(z)},
                        {"d_xy", plain},
                        {"d_translated", translated}};
        });
    }
    return rec.take();
}

SuiteResult suite_zgroup_embedding_isometry(const SuiteConfig& cfg) {
    Recorder rec("zgroup_embedding_isometry");
    Rng rng(cfg.seed, "zgroup_embedding_isometry");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const double plain = matching_distance(a, b, cfg.solver_size_cap);
        const double lifted =
            group_distance(embed_multiset(a), embed_multiset(b), cfg.solver_size_cap);
        rec.expect(std::fabs(lifted - plain) <= kExactSlack, [&] {
            return Json{{"check", "multiset_embedding_isometry"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"d_N", plain},
                        {"d_Z", lifted}};
        });
    }
    return rec.take();
}

SuiteResult suite_zgroup_group_laws(const SuiteConfig& cfg) {
    Recorder rec("zgroup_group_laws");
    Rng rng(cfg.seed, "zgroup_group_laws");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const SignedMultiset z = sample_signed(rng, space, 4);
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"z", to_json(z)}};
        };
        rec.expect(group_add(group_add(x, y), z) == group_add(x, group_add(y, z)),
                   [&] { return dump("associativity"); });
        rec.expect(group_add(x, y) == group_add(y, x), [&] { return dump("commutativity"); });
        rec.expect(group_add(x, group_neg(x)) == SignedMultiset::zero(space),
                   [&] { return dump("inverse"); });
        rec.expect(group_add(x, SignedMultiset::zero(space)) == x,
                   [&] { return dump("neutral_element"); });
    }
    return rec.take();
}

SuiteResult suite_zgroup_lipschitz_addition(const SuiteConfig& cfg) {
    Recorder rec("zgroup_lipschitz_addition");
    Rng rng(cfg.seed, "zgroup_lipschitz_addition");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const SignedMultiset x = sample_signed(rng, space, 4);
        const SignedMultiset x2 = sample_signed(rng, space, 4);
        const SignedMultiset y = sample_signed(rng, space, 4);
        const SignedMultiset y2 = sample_signed(rng, space, 4);
        const double sum_distance =
            group_distance(group_add(x, y), group_add(x2, y2), cfg.solver_size_cap);
        const double dx = group_distance(x, x2, cfg.solver_size_cap);
        const double dy = group_distance(y, y2, cfg.solver_size_cap);
        rec.expect(sum_distance <= dx + dy + cfg.tolerance_abs, [&] {
            return Json{{"check", "lipschitz_addition"},
                        {"space", to_json(*space)},
                        {"x", to_json(x)},
                        {"x2", to_json(x2)},
                        {"y", to_json(y)},
                        {"y2", to_json(y2)},
                        {"d_sum", sum_distance},
                        {"d_x", dx},
                        {"d_y", dy}};
        });
    }
    return rec.take();
}

// ---------------------------------------------------------------------------
// Truncated l1-multiset suites
// ---------------------------------------------------------------------------

SuiteResult suite_l1_enclosure_soundness(const SuiteConfig& cfg) {
    Recorder rec("l1_enclosure_soundness");
    Rng rng(cfg.seed, "l1_enclosure_soundness");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const TruncatedL1Multiset ta =
            truncate(TruncatedL1Multiset::exact(a), rng.uniform_int(0, a.total_size()));
        const TruncatedL1Multiset tb =
            truncate(TruncatedL1Multiset::exact(b), rng.uniform_int(0, b.total_size()));
        const double exact = matching_distance(a, b, cfg.solver_size_cap);
        const DistanceInterval interval = l1_distance(ta, tb, cfg.solver_size_cap);
        rec.expect(interval.contains(exact, kExactSlack), [&] {
            return Json{{"check", "enclosure_soundness"},
                        {"space", to_json(*space)},
                        {"a", to_json(a)},
                        {"b", to_json(b)},
                        {"a_truncated", to_json(ta)},
                        {"b_truncated", to_json(tb)},
                        {"exact", exact},
                        {"lower", interval.lower()},
                        {"upper", interval.upper()}};
        });
    }
    return rec.take();
}

SuiteResult suite_l1_interval_width(const SuiteConfig& cfg) {
    Recorder rec("l1_interval_width");
    Rng rng(cfg.seed, "l1_interval_width");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        GroundSpacePtr space = sample_space(rng);
        const Multiset a = sample_multiset(rng, space, 6);
        const Multiset b = sample_multiset(rng, space, 6);
        const TruncatedL1Multiset ta =
            truncate(TruncatedL1Multiset::exact(a), rng.uniform_int(0, a.total_size()));
        const TruncatedL1Multiset tb =
            truncate(TruncatedL1Multiset::exact(b), rng.uniform_int(0, b.total_size()));
        const DistanceInterval interval = l1_distance(ta, tb, cfg.solver_size_cap);
        const double tail_sum = ta.tail_mass() + tb.tail_mass();
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"space", to_json(*space)},
                        {"a_truncated", to_json(ta)},
                        {"b_truncated", to_json(tb)},
                        {"lower", interval.lower()},
                        {"upper", interval.upper()},
                        {"width", interval.width()},
                        {"tail_sum", tail_sum}};
        };
        rec.expect(0.0 <= interval.lower() && interval.lower() <= interval.upper(),
                   [&] { return dump("ordered_endpoints"); });
        rec.expect(interval.width() <= 2.0 * tail_sum + kExactSlack,
                   [&] { return dump("width_bounded"); });
        if (interval.lower() > 0.0) {
            rec.expect(interval.width() == 2.0 * tail_sum, [&] { return dump("width_exact"); });
        }
    }
    return rec.take();
}

// Geometric family {c*2^-1, ..., c*2^-K}: every distance, tail mass, and
// interval endpoint is a small multiple of c*2^-20, so all checks below are
// exact in double precision.
Multiset geometric_family(const GroundSpacePtr& line, double scale, int depth) {
    std::vector<Multiset::Entry> entries;
    for (int k = 1; k <= depth; ++k) {
        entries.emplace_back(Element({scale * std::ldexp(1.0, -k)}), 1);
    }
    return Multiset::canonicalize(line, entries);
}

SuiteResult suite_l1_monotone_refinement(const SuiteConfig& cfg) {
    Recorder rec("l1_monotone_refinement");
    Rng rng(cfg.seed, "l1_monotone_refinement");
    const GroundSpacePtr line = GroundSpace::euclidean(1, Element({0.0}));
    const std::int64_t sweeps = std::max<std::int64_t>(1, cfg.iterations / 10);
    for (std::int64_t i = 0; i < sweeps; ++i) {
        const double scale = std::ldexp(1.0, static_cast<int>(rng.uniform_int(-2, 2)));
        const int ka = static_cast<int>(rng.uniform_int(1, 20));
        const int kb = static_cast<int>(rng.uniform_int(1, 20));
        const Multiset a = geometric_family(line, scale, ka);
        const Multiset b = geometric_family(line, scale, kb);
        const double exact = matching_distance(a, b, cfg.solver_size_cap);
        const int top = std::max(ka, kb);
        double prev_lower = 0.0;
        double prev_upper = 0.0;
        for (int budget = 0; budget <= top; ++budget) {
            const DistanceInterval interval =
                l1_distance(truncate(TruncatedL1Multiset::exact(a), budget),
                            truncate(TruncatedL1Multiset::exact(b), budget), cfg.solver_size_cap);
            auto dump = [&](const char* check) {
                return Json{{"check", check},
                            {"scale", scale},        {"depth_a", ka},
                            {"depth_b", kb},         {"budget", budget},
                            {"lower", interval.lower()}, {"upper", interval.upper()},
                            {"previous_lower", prev_lower}, {"previous_upper", prev_upper},
                            {"exact", exact}};
            };
            if (budget > 0) {
                // Refinement never widens: each interval nests in the last.
                rec.expect(interval.lower() >= prev_lower && interval.upper() <= prev_upper,
                           [&] { return dump("nested_refinement"); });
            }
            rec.expect(interval.contains(exact, 0.0), [&] { return dump("contains_exact"); });
            if (budget == top) {
                rec.expect(interval.lower() == exact && interval.upper() == exact,
                           [&] { return dump("converged_to_exact"); });
            }
            prev_lower = interval.lower();
            prev_upper = interval.upper();
        }
    }
    return rec.take();
}

SuiteResult suite_l1_density(const SuiteConfig& cfg) {
    Recorder rec("l1_density");
    Rng rng(cfg.seed, "l1_density");
    const GroundSpacePtr line = GroundSpace::euclidean(1, Element({0.0}));
    const std::int64_t sweeps = std::max<std::int64_t>(1, cfg.iterations / 10);
    for (std::int64_t i = 0; i < sweeps; ++i) {
        const double scale = std::ldexp(1.0, static_cast<int>(rng.uniform_int(-3, 3)));
        const int depth = static_cast<int>(rng.uniform_int(1, 20));
        const Multiset full = geometric_family(line, scale, depth);
        double previous_tail = std::numeric_limits<double>::infinity();
        for (int budget = 0; budget <= depth; ++budget) {
            const TruncatedL1Multiset t = truncate(TruncatedL1Multiset::exact(full), budget);
            const double head_gap = matching_distance(full, t.head(), cfg.solver_size_cap);
            auto dump = [&](const char* check) {
                return Json{{"check", check},
                            {"scale", scale},
                            {"depth", depth},
                            {"budget", budget},
                            {"head_gap", head_gap},
                            {"tail_mass", t.tail_mass()},
                            {"previous_tail", previous_tail}};
            };
            // The distance to the truncation equals the dropped mass, exactly.
            rec.expect(head_gap == t.tail_mass(), [&] { return dump("distance_equals_tail"); });
            rec.expect(t.tail_mass() <= previous_tail, [&] { return dump("tail_decreasing"); });
            if (budget == depth) {
                rec.expect(t.tail_mass() == 0.0, [&] { return dump("tail_reaches_zero"); });
            }
            previous_tail = t.tail_mass();
        }
    }
    return rec.take();
}

SuiteResult suite_l1_cauchy_criterion(const SuiteConfig& cfg) {
    Recorder rec("l1_cauchy_criterion");
    const auto table = cauchy_gap_table(20);
    for (const CauchyGapRow& row : table) {
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"m", row.m},
                        {"n", row.n},
                        {"gap", row.gap},
                        {"bound", row.bound}};
        };
        // The solved gap matches the geometric-sum bound exactly: identical
        // prefix elements pair at zero cost and the excess pairs with the
        // basepoint, so both sides are the same sum of powers of two.
        rec.expect(row.gap == row.bound, [&] { return dump("gap_equals_bound"); });
        rec.expect(row.gap >= 0.0, [&] { return dump("nonnegative"); });
    }
    // Cauchy criterion: beyond prefix N all pairwise gaps drop below epsilon.
    for (const int exponent : {5, 10, 15}) {
        const double epsilon = std::ldexp(1.0, -exponent);
        for (const CauchyGapRow& row : table) {
            if (row.n < exponent) continue;
            rec.expect(row.gap < epsilon, [&] {
                return Json{{"check", "cauchy_criterion"},
                            {"epsilon", epsilon},
                            {"m", row.m},
                            {"n", row.n},
                            {"gap", row.gap}};
            });
        }
    }
    (void)cfg;
    return rec.take();
}

// ---------------------------------------------------------------------------
// Quotient-metric suites
// ---------------------------------------------------------------------------

SuiteResult suite_quotient_identity(const SuiteConfig& cfg) {
    Recorder rec("quotient_identity");
    Rng rng(cfg.seed, "quotient_identity");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const QuotientSpace qs = sample_quotient(rng, 1);
        const Element x = sample_element(rng, *qs.base());
        const Element y = sample_element(rng, *qs.base());
        const QuotientPoint px = collapse(qs, x);
        const QuotientPoint py = collapse(qs, y);
        const double dxx = quotient_distance(qs, px, px);
        const double dxy = quotient_distance(qs, px, py);
        const bool same_class = (px.is_collapsed() && py.is_collapsed()) ||
                                (!px.is_collapsed() && !py.is_collapsed() &&
                                 px.representative() == py.representative());
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"quotient", to_json(qs)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"d_xx", dxx},
                        {"d_xy", dxy}};
        };
        rec.expect(dxx == 0.0, [&] { return dump("self_distance_zero"); });
        rec.expect((dxy == 0.0) == same_class, [&] { return dump("zero_iff_same_class"); });
    }
    return rec.take();
}

SuiteResult suite_quotient_symmetry(const SuiteConfig& cfg) {
    Recorder rec("quotient_symmetry");
    Rng rng(cfg.seed, "quotient_symmetry");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const QuotientSpace qs = sample_quotient(rng, 1);
        const QuotientPoint px = collapse(qs, sample_element(rng, *qs.base()));
        const QuotientPoint py = collapse(qs, sample_element(rng, *qs.base()));
        const double dxy = quotient_distance(qs, px, py);
        const double dyx = quotient_distance(qs, py, px);
        rec.expect(dxy == dyx, [&] {
            return Json{{"check", "symmetry"}, {"quotient", to_json(qs)}, {"d_xy", dxy}, {"d_yx", dyx}};
        });
    }
    return rec.take();
}

SuiteResult suite_quotient_triangle(const SuiteConfig& cfg) {
    Recorder rec("quotient_triangle");
    Rng rng(cfg.seed, "quotient_triangle");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const QuotientSpace qs = sample_quotient(rng, 1);
        const Element x = sample_element(rng, *qs.base());
        const Element y = sample_element(rng, *qs.base());
        const Element z = sample_element(rng, *qs.base());
        const QuotientPoint px = collapse(qs, x);
        const QuotientPoint py = collapse(qs, y);
        const QuotientPoint pz = collapse(qs, z);
        const double dxz = quotient_distance(qs, px, pz);
        const double dxy = quotient_distance(qs, px, py);
        const double dyz = quotient_distance(qs, py, pz);
        rec.expect(dxz <= dxy + dyz + kExactSlack, [&] {
            return Json{{"check", "triangle"},
                        {"quotient", to_json(qs)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"z", to_json(z)},
                        {"d_xz", dxz},
                        {"d_xy", dxy},
                        {"d_yz", dyz}};
        });
    }
    return rec.take();
}

SuiteResult suite_quotient_lipschitz_collapse(const SuiteConfig& cfg) {
    Recorder rec("quotient_lipschitz_collapse");
    Rng rng(cfg.seed, "quotient_lipschitz_collapse");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const QuotientSpace qs = sample_quotient(rng, 1);
        const Element x = sample_element(rng, *qs.base());
        const Element y = sample_element(rng, *qs.base());
        const double upstairs = dist(*qs.base(), x, y);
        const double downstairs = quotient_distance(qs, collapse(qs, x), collapse(qs, y));
        // The collapse map never increases distances; this holds without slack
        // because the quotient formula takes a min that includes d(x,y) itself.
        rec.expect(downstairs <= upstairs, [&] {
            return Json{{"check", "lipschitz_collapse"},
                        {"quotient", to_json(qs)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"upstairs", upstairs},
                        {"downstairs", downstairs}};
        });
    }
    return rec.take();
}

SuiteResult suite_quotient_subset_triangle(const SuiteConfig& cfg) {
    Recorder rec("quotient_subset_triangle");
    Rng rng(cfg.seed, "quotient_subset_triangle");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const QuotientSpace qs = sample_quotient(rng, 1);
        const Element x = sample_element(rng, *qs.base());
        const Element y = sample_element(rng, *qs.base());
        const double dx = dist_to_set(*qs.base(), x, qs.collapsed_subset());
        const double dy = dist_to_set(*qs.base(), y, qs.collapsed_subset());
        const double dxy = dist(*qs.base(), x, y);
        rec.expect(dx <= dxy + dy + kExactSlack, [&] {
            return Json{{"check", "subset_triangle"},
                        {"quotient", to_json(qs)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"d_xH", dx},
                        {"d_xy", dxy},
                        {"d_yH", dy}};
        });
    }
    return rec.take();
}

SuiteResult suite_quotient_pseudometric_regression(const SuiteConfig& cfg) {
    Recorder rec("quotient_pseudometric_regression");
    Rng rng(cfg.seed, "quotient_pseudometric_regression");
    for (std::int64_t i = 0; i < cfg.iterations; ++i) {
        const QuotientSpace qs = sample_quotient(rng, 2);
        const auto& subset = qs.collapsed_subset();
        const std::size_t first = rng.uniform_index(subset.size());
        std::size_t second = rng.uniform_index(subset.size() - 1);
        if (second >= first) ++second;
        const Element& x = subset[first];
        const Element& y = subset[second];
        const double formula = quotient_formula(qs, x, y);
        const double upstairs = dist(*qs.base(), x, y);
        auto dump = [&](const char* check) {
            return Json{{"check", check},
                        {"quotient", to_json(qs)},
                        {"x", to_json(x)},
                        {"y", to_json(y)},
                        {"formula", formula},
                        {"upstairs", upstairs}};
        };
        // Applied without collapsing, the formula degenerates on H: distinct
        // points at formula-distance zero.  The quotient map removes exactly
        // this degeneracy.
        rec.expect(formula == 0.0, [&] { return dump("formula_degenerates_on_subset"); });
        rec.expect(upstairs > 0.0, [&] { return dump("base_separates_points"); });
    }
    return rec.take();
}

}  // namespace

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> s = {
            {"assign_oracle_equivalence",
             "solver optimum equals brute-force optimum on random matrices (n <= 7)",
             suite_assign_oracle_equivalence},
            {"assign_permutation_validity",
             "solver output is always a bijection between rows and columns",
             suite_assign_permutation_validity},
            {"assign_scale_equivariance",
             "scaling all costs by lambda scales the optimum by lambda",
             suite_assign_scale_equivariance},
            {"ground_metric_axioms",
             "ground distances are nonnegative, symmetric, triangular, and separate keys",
             suite_ground_metric_axioms},
            {"ground_subset_triangle",
             "distance-to-set obeys d(p,H) <= d(p,q) + d(q,H)",
             suite_ground_subset_triangle},
            {"l1_cauchy_criterion",
             "prefix-sequence gaps match the geometric bound and shrink below every epsilon",
             suite_l1_cauchy_criterion},
            {"l1_density",
             "distance to a truncation equals the dropped tail mass on geometric families",
             suite_l1_density},
            {"l1_enclosure_soundness",
             "the exact distance always lies inside the certified interval",
             suite_l1_enclosure_soundness},
            {"l1_interval_width",
             "interval width is exactly twice the combined tail mass when unclamped",
             suite_l1_interval_width},
            {"l1_monotone_refinement",
             "raising the truncation budget nests the intervals down to the exact value",
             suite_l1_monotone_refinement},
            {"nmultiset_cancellation",
             "adding a common multiset to both arguments leaves the distance unchanged",
             suite_nmultiset_cancellation},
            {"nmultiset_embedding_isometry",
             "singleton embedding preserves ground distances",
             suite_nmultiset_embedding_isometry},
            {"nmultiset_identity",
             "self-distance is zero and zero distance implies equal canonical forms",
             suite_nmultiset_identity},
            {"nmultiset_lipschitz_addition",
             "multiset addition is 1-Lipschitz in both arguments jointly",
             suite_nmultiset_lipschitz_addition},
            {"nmultiset_padding_invariance",
             "the matching distance is constant across all admissible padded sizes",
             suite_nmultiset_padding_invariance},
            {"nmultiset_restriction_equal_size",
             "for equal sizes the padded distance equals the unpadded matching minimum",
             suite_nmultiset_restriction_equal_size},
            {"nmultiset_symmetry",
             "matching distance is bitwise symmetric in its arguments",
             suite_nmultiset_symmetry},
            {"nmultiset_triangle",
             "matching distance satisfies the triangle inequality",
             suite_nmultiset_triangle},
            {"quotient_identity",
             "quotient distance vanishes exactly on equal classes",
             suite_quotient_identity},
            {"quotient_lipschitz_collapse",
             "the collapse map never increases distances",
             suite_quotient_lipschitz_collapse},
            {"quotient_pseudometric_regression",
             "without collapsing, the formula degenerates on the identified subset",
             suite_quotient_pseudometric_regression},
            {"quotient_subset_triangle",
             "distance to the collapsed subset obeys the triangle inequality",
             suite_quotient_subset_triangle},
            {"quotient_symmetry",
             "quotient distance is bitwise symmetric",
             suite_quotient_symmetry},
            {"quotient_triangle",
             "quotient distance satisfies the triangle inequality",
             suite_quotient_triangle},
            {"zgroup_embedding_isometry",
             "embedding multisets into the group preserves the matching distance",
             suite_zgroup_embedding_isometry},
            {"zgroup_group_laws",
             "addition is associative and commutative with inverses and a neutral element",
             suite_zgroup_group_laws},
            {"zgroup_identity",
             "group self-distance is zero and zero distance implies equality",
             suite_zgroup_identity},
            {"zgroup_inflation_invariance",
             "the group distance is independent of the chosen decomposition",
             suite_zgroup_inflation_invariance},
            {"zgroup_lipschitz_addition",
             "group addition is 1-Lipschitz in both arguments jointly",
             suite_zgroup_lipschitz_addition},
            {"zgroup_symmetry",
             "group distance is bitwise symmetric",
             suite_zgroup_symmetry},
            {"zgroup_translation_invariance",
             "translating both arguments leaves the group distance unchanged",
             suite_zgroup_translation_invariance},
            {"zgroup_triangle",
             "group distance satisfies the triangle inequality",
             suite_zgroup_triangle},
        };
        std::sort(s.begin(), s.end(),
                  [](const Suite& a, const Suite& b) { return a.name < b.name; });
        return s;
    }();
    return suites;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
    for (const Suite& suite : all_suites()) {
        if (suite.name == name) return suite.run(config);
    }
    throw ValidationError("unknown suite \"" + name + "\"");
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config) {
    const std::vector<Suite>& suites = all_suites();
    std::vector<std::future<SuiteResult>> futures;
    futures.reserve(suites.size());
    for (const Suite& suite : suites) {
        futures.push_back(std::async(std::launch::async, suite.run, config));
    }
    std::vector<SuiteResult> results;
    results.reserve(suites.size());
    for (auto& future : futures) results.push_back(future.get());
    return results;
}

}  // namespace msm
