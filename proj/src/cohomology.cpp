#include "galdef/cohomology.hpp"

#include <algorithm>
#include <deque>

#include "galdef/errors.hpp"

namespace galdef {

namespace {

struct DiffShape {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
};

DiffShape diff_shape(std::uint32_t n, std::uint32_t nelems, std::uint32_t d) {
    std::uint64_t src = d, dst = d;
    for (std::uint32_t k = 0; k < n; ++k) src *= nelems;
    dst = src * nelems;
    return {dst, src};
}

void check_budget(const char* what, DiffShape s, std::uint64_t entry_budget) {
    if (s.rows == 0 || s.cols == 0) return;
    if (s.rows > entry_budget / s.cols)
        throw too_large(std::string(what) + ": differential has " + std::to_string(s.rows) + " x " +
                        std::to_string(s.cols) + " entries, over the budget of " +
                        std::to_string(entry_budget));
}

// Streams the rows of d^n (n = 0, 1, 2) in row-major order into sink.
// Each row is the flat-basis expansion of one coordinate of the output
// cochain at one element tuple.
template <typename Sink>
void emit_diff_rows(const GroupView& view, const GaloisModule& module, std::uint32_t n,
                    Sink&& sink) {
    const std::uint32_t ne = view.size();
    const std::uint32_t d = module.dim();
    const std::uint32_t ell = module.ell();
    const std::uint64_t cols = diff_shape(n, ne, d).cols;
    std::vector<FpMatrix> act = action_table(view, module);
    std::vector<std::uint32_t> row((std::size_t)cols, 0);

    auto add = [&](std::size_t col, std::uint32_t v) { row[col] = (row[col] + v) % ell; };
    auto sub = [&](std::size_t col, std::uint32_t v) { row[col] = (row[col] + ell - v) % ell; };

    if (n == 0) {
        // (d0 m)(g) = A_g m - m at coordinate r
        for (std::uint32_t g = 0; g < ne; ++g) {
            const FpMatrix& A = act[g];
            for (std::uint32_t r = 0; r < d; ++r) {
                std::fill(row.begin(), row.end(), 0);
                for (std::uint32_t c = 0; c < d; ++c) add(c, A.at(r, c));
                sub(r, 1);
                sink(row);
            }
        }
        return;
    }
    if (n == 1) {
        // (d1 b)(g,h) = A_g b(h) - b(gh) + b(g)
        for (std::uint32_t g = 0; g < ne; ++g) {
            const FpMatrix& A = act[g];
            for (std::uint32_t h = 0; h < ne; ++h) {
                std::uint32_t gh = view.mul(g, h);
                for (std::uint32_t r = 0; r < d; ++r) {
                    std::fill(row.begin(), row.end(), 0);
                    for (std::uint32_t c = 0; c < d; ++c) add((std::size_t)h * d + c, A.at(r, c));
                    sub((std::size_t)gh * d + r, 1);
                    add((std::size_t)g * d + r, 1);
                    sink(row);
                }
            }
        }
        return;
    }
    if (n == 2) {
        // (d2 u)(g,h,k) = A_g u(h,k) - u(gh,k) + u(g,hk) - u(g,h)
        auto pair_block = [&](std::uint32_t a, std::uint32_t b) {
            return ((std::size_t)a * ne + b) * d;
        };
        for (std::uint32_t g = 0; g < ne; ++g) {
            const FpMatrix& A = act[g];
            for (std::uint32_t h = 0; h < ne; ++h) {
                std::uint32_t gh = view.mul(g, h);
                for (std::uint32_t k = 0; k < ne; ++k) {
                    std::uint32_t hk = view.mul(h, k);
                    for (std::uint32_t r = 0; r < d; ++r) {
                        std::fill(row.begin(), row.end(), 0);
                        for (std::uint32_t c = 0; c < d; ++c) add(pair_block(h, k) + c, A.at(r, c));
                        sub(pair_block(gh, k) + r, 1);
                        add(pair_block(g, hk) + r, 1);
                        sub(pair_block(g, h) + r, 1);
                        sink(row);
                    }
                }
            }
        }
        return;
    }
    throw invalid_parameters("emit_diff_rows: degree must be 0, 1 or 2");
}

std::uint32_t rank_of_diff(const GroupView& view, const GaloisModule& module, std::uint32_t n,
                           std::uint64_t entry_budget) {
    DiffShape s = diff_shape(n, view.size(), module.dim());
    check_budget("cohomology_dim", s, entry_budget);
    StreamingRank sr((std::uint32_t)s.cols, module.ell());
    emit_diff_rows(view, module, n, [&](const std::vector<std::uint32_t>& row) { sr.add_row(row); });
    return sr.rank();
}

void check_view_module(const GroupView& view, const GaloisModule& module, const char* where) {
    if (view.group().key() != module.group().key())
        throw invalid_parameters(std::string(where) + ": view and module over different groups");
}

// Gauss-Jordan elimination over F_p on augmented rows [coeffs | rhs],
// fed one row at a time. Width counts the unknowns only.
class AugmentedSolver {
  public:
    AugmentedSolver(std::uint32_t width, std::uint32_t mod) : width_(width), mod_(mod) {}

    // false when the row is inconsistent with what came before
    bool add_row(std::vector<std::uint32_t> row) {
        reduce(row);
        std::uint32_t lead = width_ + 1;
        for (std::uint32_t c = 0; c < width_; ++c)
            if (row[c]) { lead = c; break; }
        if (lead > width_) return row[width_] == 0;
        std::uint32_t inv = FpScalar(row[lead], mod_).inverse().v;
        for (auto& x : row) x = (std::uint32_t)((std::uint64_t)x * inv % mod_);
        for (auto& p : rows_) {
            std::uint32_t f = p.second[lead];
            if (!f) continue;
            for (std::uint32_t c = 0; c <= width_; ++c)
                p.second[c] = (std::uint32_t)((p.second[c] + (std::uint64_t)(mod_ - f) * row[c]) % mod_);
        }
        rows_.emplace_back(lead, std::move(row));
        return true;
    }

    // solution with free variables at zero
    std::vector<std::uint32_t> solution() const {
        std::vector<std::uint32_t> s(width_, 0);
        for (const auto& p : rows_) s[p.first] = p.second[width_];
        return s;
    }

  private:
    void reduce(std::vector<std::uint32_t>& row) const {
        for (const auto& p : rows_) {
            std::uint32_t f = row[p.first];
            if (!f) continue;
            for (std::uint32_t c = 0; c <= width_; ++c)
                row[c] = (std::uint32_t)((row[c] + (std::uint64_t)(mod_ - f) * p.second[c]) % mod_);
        }
    }

    std::uint32_t width_, mod_;
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> rows_;
};

std::vector<std::uint32_t> mat_vec(const FpMatrix& A, const std::uint32_t* v) {
    std::vector<std::uint32_t> out(A.rows, 0);
    for (std::uint32_t r = 0; r < A.rows; ++r) {
        std::uint64_t s = 0;
        for (std::uint32_t c = 0; c < A.cols; ++c) s += (std::uint64_t)A.at(r, c) * v[c] % A.mod;
        out[r] = (std::uint32_t)(s % A.mod);
    }
    return out;
}

} // namespace

FpMatrix coboundary_matrix(const GroupView& view, const GaloisModule& module, std::uint32_t n,
                           std::uint64_t entry_budget) {
    check_view_module(view, module, "coboundary_matrix");
    if (n > 2) throw invalid_parameters("coboundary_matrix: degree must be 0, 1 or 2");
    DiffShape s = diff_shape(n, view.size(), module.dim());
    check_budget("coboundary_matrix", s, entry_budget);
    FpMatrix M((std::uint32_t)s.rows, (std::uint32_t)s.cols, module.ell());
    std::size_t r = 0;
    emit_diff_rows(view, module, n, [&](const std::vector<std::uint32_t>& row) {
        std::copy(row.begin(), row.end(), M.a.begin() + (std::ptrdiff_t)(r * s.cols));
        ++r;
    });
    return M;
}

std::uint32_t cohomology_dim(const GroupView& view, const GaloisModule& module, std::uint32_t n,
                             std::uint64_t entry_budget) {
    check_view_module(view, module, "cohomology_dim");
    const std::uint32_t d = module.dim();
    const std::uint32_t ne = view.size();
    if (n == 0) return d - rank_of_diff(view, module, 0, entry_budget);
    if (n == 1) {
        std::uint32_t z1 = ne * d - rank_of_diff(view, module, 1, entry_budget);
        return z1 - rank_of_diff(view, module, 0, entry_budget);
    }
    if (n == 2) {
        std::uint32_t z2 = ne * ne * d - rank_of_diff(view, module, 2, entry_budget);
        return z2 - rank_of_diff(view, module, 1, entry_budget);
    }
    throw invalid_parameters("cohomology_dim: degree must be 0, 1 or 2");
}

std::optional<Cochain> is_coboundary(const Cochain& c, std::uint64_t triple_budget,
                                     std::uint64_t seed) {
    const GroupView& V = *c.view;
    const GaloisModule& M = *c.module;
    const std::uint32_t ne = V.size();
    const std::uint32_t d = M.dim();
    const std::uint32_t ell = M.ell();

    if (c.degree == 1) {
        CocycleCheck chk = is_cocycle(c, triple_budget, seed);
        if (!chk.ok) throw invalid_parameters("is_coboundary: input is not a 1-cocycle");
        FpMatrix A = coboundary_matrix(V, M, 0);
        auto x = solve_linear(A, c.values);
        if (!x) return std::nullopt;
        Cochain pre = Cochain::zero(c.view, c.module, 0);
        pre.values = std::move(*x);
        return pre;
    }
    if (c.degree != 2) throw invalid_parameters("is_coboundary: degree must be 1 or 2");

    CocycleCheck chk = is_cocycle(c, triple_budget, seed);
    if (!chk.ok) throw invalid_parameters("is_coboundary: input is not a 2-cocycle");

    // Solve d1(x) = c by generator propagation. The recurrence
    //   x(u g) = A_u x(g) + x(u) - c(u, g)
    // pins every x value as an affine function P[w] s + r[w] of the stacked
    // generator values s; scanning all pairs yields a small consistency
    // system in s. Exact, and never materializes the dense d1.
    const auto& gens = V.generators();
    const std::uint32_t t = (std::uint32_t)gens.size();
    const std::uint32_t D = t * d;
    std::vector<FpMatrix> act = action_table(V, M);

    std::vector<FpMatrix> P(ne, FpMatrix(d, D, ell));
    std::vector<std::vector<std::uint32_t>> r(ne, std::vector<std::uint32_t>(d, 0));
    std::vector<char> seen(ne, 0);

    const std::uint32_t id = V.identity_index();
    r[id] = c.get2(id, id);
    seen[id] = 1;
    std::deque<std::uint32_t> queue{id};
    for (std::uint32_t k = 0; k < t; ++k) {
        std::uint32_t g = gens[k];
        if (seen[g]) continue;
        for (std::uint32_t rr = 0; rr < d; ++rr) P[g].at(rr, k * d + rr) = 1;
        seen[g] = 1;
        queue.push_back(g);
    }
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t k = 0; k < t; ++k) {
            std::uint32_t g = gens[k];
            std::uint32_t w = V.mul(u, g);
            if (seen[w]) continue;
            P[w] = act[u] * P[g] + P[u];
            std::vector<std::uint32_t> val = mat_vec(act[u], r[g].data());
            const std::uint32_t* cug = c.at2(u, g);
            for (std::uint32_t rr = 0; rr < d; ++rr)
                r[w][rr] = (std::uint32_t)(((std::uint64_t)val[rr] + r[u][rr] + ell - cug[rr]) % ell);
            seen[w] = 1;
            queue.push_back(w);
        }
    }
    for (std::uint32_t w = 0; w < ne; ++w)
        if (!seen[w]) throw invariant_violation("is_coboundary: generators do not span the view");

    AugmentedSolver solver(D, ell);
    std::vector<std::uint32_t> row(D + 1);
    for (std::uint32_t g = 0; g < ne; ++g) {
        const FpMatrix& A = act[g];
        for (std::uint32_t h = 0; h < ne; ++h) {
            std::uint32_t gh = V.mul(g, h);
            FpMatrix coeff = A * P[h] + P[g] - P[gh];
            std::vector<std::uint32_t> ar = mat_vec(A, r[h].data());
            const std::uint32_t* cgh = c.at2(g, h);
            for (std::uint32_t rr = 0; rr < d; ++rr) {
                bool nz = false;
                for (std::uint32_t cc = 0; cc < D; ++cc) {
                    row[cc] = coeff.at(rr, cc);
                    nz |= (row[cc] != 0);
                }
                std::uint64_t rhs = ((std::uint64_t)cgh[rr] + 3ull * ell - ar[rr] - r[g][rr] +
                                     r[gh][rr]) % ell;
                row[D] = (std::uint32_t)rhs;
                nz |= (row[D] != 0);
                if (nz && !solver.add_row(row)) return std::nullopt;
            }
        }
    }

    std::vector<std::uint32_t> s = solver.solution();
    Cochain pre = Cochain::zero(c.view, c.module, 1);
    for (std::uint32_t g = 0; g < ne; ++g) {
        std::vector<std::uint32_t> val = mat_vec(P[g], s.data());
        std::uint32_t* out = pre.at1(g);
        for (std::uint32_t rr = 0; rr < d; ++rr) out[rr] = (val[rr] + r[g][rr]) % ell;
    }
    return pre;
}

CohomologyClass::CohomologyClass(Cochain representative, std::uint64_t triple_budget,
                                 std::uint64_t seed)
    : rep(std::move(representative)) {
    if (rep.degree != 1 && rep.degree != 2)
        throw invalid_parameters("CohomologyClass: degree must be 1 or 2");
    CocycleCheck chk = is_cocycle(rep, triple_budget, seed);
    if (!chk.ok)
        throw invalid_parameters("CohomologyClass: representative is not a cocycle (witness at indices " +
                                 std::to_string(chk.witness[0]) + "," + std::to_string(chk.witness[1]) +
                                 "," + std::to_string(chk.witness[2]) + ")");
}

std::pair<std::uint32_t, std::uint32_t> CohomologyClass::ambient_dims(
    std::uint64_t entry_budget) const {
    const GroupView& V = *rep.view;
    const GaloisModule& M = *rep.module;
    DiffShape up = diff_shape(rep.degree, V.size(), M.dim());
    std::uint32_t z = (std::uint32_t)up.cols - rank_of_diff(V, M, rep.degree, entry_budget);
    std::uint32_t b = rank_of_diff(V, M, rep.degree - 1, entry_budget);
    return {z, b};
}

namespace {

// tr(M0 * basis_j) as a row functional on u_module coordinates, after
// checking that m0 is invariant and that the functional intertwines the
// module action with the cyclotomic character on the view's generators.
std::vector<std::uint32_t> trace_functional(const Cochain& m0, const GaloisModule& u_module,
                                            const GroupView& view) {
    if (m0.degree != 0) throw invalid_parameters("cup_trace: m0 must be a 0-cochain");
    if (!m0.module->has_matrix_basis() || !u_module.has_matrix_basis())
        throw invalid_parameters("cup_trace: both modules need a matrix basis");
    if (m0.module->group().key() != u_module.group().key())
        throw invalid_parameters("cup_trace: modules over different groups");
    check_view_module(view, u_module, "cup_trace");

    const std::uint32_t ell = u_module.ell();
    std::vector<std::uint32_t> m0v = m0.get1(0);
    for (std::uint32_t g : view.generators()) {
        std::vector<std::uint32_t> gm = m0.module->act(view.element(g), m0v);
        if (gm != m0v) throw invalid_parameters("cup_trace: m0 is not invariant on the view");
    }

    FpMatrix M0 = m0.module->to_matrix(m0v);
    const auto& basis = u_module.matrix_basis();
    std::vector<std::uint32_t> phi(u_module.dim(), 0);
    for (std::uint32_t j = 0; j < u_module.dim(); ++j)
        phi[j] = (M0 * basis[j]).trace();

    // phi(A_g X) = eps(g) phi(X) on generators forces it on the whole view
    for (std::uint32_t g : view.generators()) {
        FpMatrix A = u_module.action(view.element(g));
        std::uint32_t e = view.eps(g);
        for (std::uint32_t j = 0; j < u_module.dim(); ++j) {
            std::uint64_t lhs = 0;
            for (std::uint32_t k = 0; k < u_module.dim(); ++k)
                lhs += (std::uint64_t)phi[k] * A.at(k, j) % ell;
            std::uint64_t rhs = (std::uint64_t)e * phi[j] % ell;
            if (lhs % ell != rhs)
                throw invalid_parameters(
                    "cup_trace: tr(M0 . ) does not intertwine the action with the cyclotomic character");
        }
    }
    return phi;
}

} // namespace

Cochain cup_trace(const Cochain& m0, const Cochain& u) {
    if (u.degree != 2) throw invalid_parameters("cup_trace: u must be a 2-cochain");
    const GroupView& V = *u.view;
    std::vector<std::uint32_t> phi = trace_functional(m0, *u.module, V);
    const std::uint32_t ell = u.module->ell();
    const std::uint32_t d = u.dim();
    const std::uint32_t ne = V.size();

    Cochain out = Cochain::zero(u.view, mu_module(u.module->group_ptr()), 2);
    for (std::uint32_t g = 0; g < ne; ++g)
        for (std::uint32_t h = 0; h < ne; ++h) {
            const std::uint32_t* uv = u.at2(g, h);
            std::uint64_t s = 0;
            for (std::uint32_t j = 0; j < d; ++j) s += (std::uint64_t)phi[j] * uv[j] % ell;
            out.at2(g, h)[0] = (std::uint32_t)(s % ell);
        }
    return out;
}

std::optional<CohomologyClass> solve_dual_class(const Cochain& m0, const CohomologyClass& target,
                                                std::shared_ptr<const GaloisModule> u_module) {
    const Cochain& t = target.rep;
    if (t.degree != 2) throw invalid_parameters("solve_dual_class: target must have degree 2");
    if (t.module->dim() != 1 || t.module->act_frob().at(0, 0) != t.module->group().q() % t.module->ell() ||
        t.module->act_tau().at(0, 0) != 1)
        throw invalid_parameters("solve_dual_class: target must take values in mu_ell");
    if (u_module->group().key() != t.module->group().key())
        throw invalid_parameters("solve_dual_class: modules over different groups");

    const GroupView& V = *t.view;
    std::shared_ptr<const GroupView> view = t.view;
    std::vector<std::uint32_t> phi = trace_functional(m0, *u_module, V);
    const std::uint32_t ell = u_module->ell();
    const std::uint32_t d = u_module->dim();
    const std::uint32_t ne = V.size();

    bool phi_zero = std::all_of(phi.begin(), phi.end(), [](std::uint32_t x) { return x == 0; });
    if (phi_zero) {
        // every class pairs to zero, so the equation has a solution exactly
        // when the target class is itself zero
        if (is_coboundary(t)) return CohomologyClass(Cochain::zero(view, u_module, 2));
        return std::nullopt;
    }

    // Look for v with A_g v = eps(g) v on the generators and tr(M0 v) = 1;
    // then u = t tensor v is a cocycle with cup_trace(m0, u) = t on the nose.
    const auto& gens = V.generators();
    FpMatrix stack((std::uint32_t)gens.size() * d, d, ell);
    for (std::uint32_t k = 0; k < gens.size(); ++k) {
        FpMatrix A = u_module->action(V.element(gens[k]));
        std::uint32_t e = V.eps(gens[k]);
        for (std::uint32_t rr = 0; rr < d; ++rr)
            for (std::uint32_t cc = 0; cc < d; ++cc) {
                std::uint32_t val = A.at(rr, cc);
                if (rr == cc) val = (val + ell - e % ell) % ell;
                stack.at(k * d + rr, cc) = val;
            }
    }
    RowReduceResult rr = row_reduce(stack);
    for (const auto& kvec : rr.kernel) {
        std::uint64_t pairing = 0;
        for (std::uint32_t j = 0; j < d; ++j) pairing += (std::uint64_t)phi[j] * kvec[j] % ell;
        std::uint32_t pv = (std::uint32_t)(pairing % ell);
        if (pv == 0) continue;
        std::uint32_t inv = FpScalar(pv, ell).inverse().v;
        Cochain u = Cochain::zero(view, u_module, 2);
        for (std::uint32_t g = 0; g < ne; ++g)
            for (std::uint32_t h = 0; h < ne; ++h) {
                std::uint32_t tv = t.at2(g, h)[0];
                std::uint32_t* out = u.at2(g, h);
                for (std::uint32_t j = 0; j < d; ++j)
                    out[j] = (std::uint32_t)((std::uint64_t)tv * kvec[j] % ell * inv % ell);
            }
        return CohomologyClass(std::move(u));
    }

    // No equivariant line pairs against m0. Joint dense solve on small
    // views: unknowns (u, e), equations d2(u) = 0 and phi(u) - d1(e) = t.
    const std::uint64_t budget = 40000000;
    std::uint64_t urows = (std::uint64_t)ne * ne * ne * d, ucols = (std::uint64_t)ne * ne * d;
    std::uint64_t rows = urows + (std::uint64_t)ne * ne, cols = ucols + ne;
    if (rows > budget / cols)
        throw too_large("solve_dual_class: no equivariant reduction and the dense system is over budget");

    FpMatrix sys((std::uint32_t)rows, (std::uint32_t)cols, ell);
    std::size_t rpos = 0;
    emit_diff_rows(V, *u_module, 2, [&](const std::vector<std::uint32_t>& row) {
        std::copy(row.begin(), row.end(), sys.a.begin() + (std::ptrdiff_t)(rpos * cols));
        ++rpos;
    });
    std::vector<std::uint32_t> rhs(rows, 0);
    for (std::uint32_t g = 0; g < ne; ++g)
        for (std::uint32_t h = 0; h < ne; ++h) {
            std::size_t rowi = urows + (std::size_t)g * ne + h;
            std::uint32_t* base = &sys.a[rowi * cols];
            for (std::uint32_t j = 0; j < d; ++j) base[((std::size_t)g * ne + h) * d + j] = phi[j];
            std::uint32_t gh = V.mul(g, h);
            std::uint32_t eg = V.eps(g);
            // -(d1 e)(g,h) = -eps(g) e(h) + e(gh) - e(g)
            base[ucols + h] = (base[ucols + h] + ell - eg % ell) % ell;
            base[ucols + gh] = (base[ucols + gh] + 1) % ell;
            base[ucols + g] = (base[ucols + g] + ell - 1) % ell;
            rhs[rowi] = t.at2(g, h)[0];
        }
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;
    Cochain u = Cochain::zero(view, u_module, 2);
    std::copy(sol->begin(), sol->begin() + (std::ptrdiff_t)ucols, u.values.begin());
    return CohomologyClass(std::move(u));
}

} // namespace galdef
