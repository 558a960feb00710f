#include "galdef/galois_modules.hpp"

#include "galdef/nt.hpp"

namespace galdef {

ResidualFrobenius::ResidualFrobenius(std::uint32_t ell_, std::int64_t alpha_, std::int64_t beta_) {
    if (!is_prime(ell_) || ell_ <= 3) throw invalid_parameters("ResidualFrobenius: ell must be a prime > 3");
    ell = ell_;
    auto red = [&](std::int64_t x) {
        std::int64_t r = x % (std::int64_t)ell_;
        if (r < 0) r += ell_;
        return (std::uint32_t)r;
    };
    alpha = red(alpha_);
    beta = red(beta_);
    if (alpha == 0 || beta == 0)
        throw invalid_parameters("ResidualFrobenius: alpha and beta must be nonzero mod ell");
}

FpMatrix ResidualFrobenius::frob_matrix() const {
    FpMatrix f(2, 2, ell);
    f.at(0, 0) = alpha;
    f.at(1, 1) = beta;
    return f;
}

std::uint32_t ResidualFrobenius::ratio() const {
    return (std::uint32_t)((std::uint64_t)alpha * inv_mod(beta, ell) % ell);
}

GaloisModule::GaloisModule(std::shared_ptr<const TameGroup> group, FpMatrix act_frob,
                           FpMatrix act_tau, std::string label, std::vector<FpMatrix> matrix_basis)
    : group_(std::move(group)), actF_(std::move(act_frob)), actT_(std::move(act_tau)),
      label_(std::move(label)), basis_(std::move(matrix_basis)) {
    const std::uint32_t ell = group_->ell();
    if (actF_.rows != actF_.cols || actT_.rows != actT_.cols || actF_.rows != actT_.rows)
        throw invalid_parameters("GaloisModule: action matrices must be square of equal size");
    if (actF_.mod != ell || actT_.mod != ell)
        throw invalid_parameters("GaloisModule: action matrices must be mod ell");
    dim_ = actF_.rows;
    if (!basis_.empty() && basis_.size() != dim_)
        throw invalid_parameters("GaloisModule: matrix basis size mismatch");

    // the assignment must factor through the presentation
    FpMatrix I = FpMatrix::identity(dim_, ell);
    if (!(actT_.pow(ell) == I))
        throw invalid_parameters("GaloisModule: action(tau)^ell != 1");
    if (!(actF_.pow(group_->m()) == I))
        throw invalid_parameters("GaloisModule: action(F)^m != 1");
    FpMatrix lhs = actF_ * actT_ * actF_.inverse();
    if (!(lhs == actT_.pow(group_->q())))
        throw invalid_parameters("GaloisModule: twist relation violated by the action");

    frob_pows_.reserve(group_->m());
    FpMatrix acc = I;
    for (std::uint32_t i = 0; i < group_->m(); ++i) {
        frob_pows_.push_back(acc);
        acc = acc * actF_;
    }
    tau_pows_.reserve(ell);
    acc = I;
    for (std::uint32_t i = 0; i < ell; ++i) {
        tau_pows_.push_back(acc);
        acc = acc * actT_;
    }
}

FpMatrix GaloisModule::action(const TameElement& g) const {
    if (g.gkey != group_->key()) throw invalid_parameters("GaloisModule: element from a different group");
    return frob_pows_[g.i] * tau_pows_[g.ip];
}

std::vector<std::uint32_t> GaloisModule::act(const TameElement& g,
                                             const std::vector<std::uint32_t>& v) const {
    return action(g).apply(v);
}

FpMatrix GaloisModule::to_matrix(const std::vector<std::uint32_t>& coords) const {
    if (!has_matrix_basis()) throw invalid_parameters("GaloisModule: no matrix realization");
    if (coords.size() != dim_) throw invalid_parameters("GaloisModule: coordinate length mismatch");
    FpMatrix out(2, 2, ell());
    for (std::uint32_t k = 0; k < dim_; ++k)
        for (std::uint32_t e = 0; e < 4; ++e)
            out.a[e] = (std::uint32_t)((out.a[e] + (std::uint64_t)coords[k] * basis_[k].a[e]) % ell());
    return out;
}

std::vector<std::uint32_t> GaloisModule::from_matrix(const FpMatrix& mat) const {
    if (!has_matrix_basis()) throw invalid_parameters("GaloisModule: no matrix realization");
    if (mat.rows != 2 || mat.cols != 2 || mat.mod != ell())
        throw invalid_parameters("GaloisModule: bad matrix for coordinates");
    // solve sum_k x_k basis_k = mat as a 4 x dim linear system
    FpMatrix A(4, dim_, ell());
    for (std::uint32_t k = 0; k < dim_; ++k)
        for (std::uint32_t e = 0; e < 4; ++e) A.at(e, k) = basis_[k].a[e];
    auto sol = solve_linear(A, {mat.a[0], mat.a[1], mat.a[2], mat.a[3]});
    if (!sol) throw invalid_parameters("GaloisModule: matrix not in the span of the basis");
    return *sol;
}

namespace {

// e1 = diag(1,-1), e2 = upper right, e3 = lower left, id = identity
std::vector<FpMatrix> standard_basis(std::uint32_t ell, bool with_identity) {
    std::vector<FpMatrix> basis;
    FpMatrix id = FpMatrix::identity(2, ell);
    FpMatrix e1(2, 2, ell), e2(2, 2, ell), e3(2, 2, ell);
    e1.at(0, 0) = 1;
    e1.at(1, 1) = ell - 1;
    e2.at(0, 1) = 1;
    e3.at(1, 0) = 1;
    if (with_identity) basis.push_back(id);
    basis.push_back(e1);
    basis.push_back(e2);
    basis.push_back(e3);
    return basis;
}

std::shared_ptr<const GaloisModule> build_conjugation_module(
    std::shared_ptr<const TameGroup> group, const ResidualFrobenius& frob, bool twisted,
    bool with_identity, const std::string& label) {
    if (frob.ell != group->ell())
        throw invalid_parameters("build_adjoint: Frobenius data and group have different ell");
    const std::uint32_t ell = group->ell();
    const std::uint32_t q = group->q();
    const std::uint32_t r = frob.ratio();              // alpha/beta
    const std::uint32_t rinv = (std::uint32_t)inv_mod(r, ell); // beta/alpha
    const std::uint32_t tw = twisted ? q : 1;

    std::uint32_t d = with_identity ? 4 : 3;
    FpMatrix aF(d, d, ell), aT(d, d, ell);
    // conjugation by diag(alpha,beta) is diagonal on (id,) e1, e2, e3
    std::vector<std::uint64_t> eig;
    if (with_identity) eig.push_back(1);
    eig.push_back(1);
    eig.push_back(r);
    eig.push_back(rinv);
    for (std::uint32_t k = 0; k < d; ++k) {
        aF.at(k, k) = (std::uint32_t)(eig[k] * tw % ell);
        aT.at(k, k) = 1;
    }
    return std::make_shared<const GaloisModule>(group, aF, aT, label,
                                                standard_basis(ell, with_identity));
}

} // namespace

std::shared_ptr<const GaloisModule> build_adjoint(std::shared_ptr<const TameGroup> group,
                                                  const ResidualFrobenius& frob, bool twisted) {
    return build_conjugation_module(std::move(group), frob, twisted, false,
                                    twisted ? "ad0_twisted" : "ad0");
}

std::shared_ptr<const GaloisModule> build_ad(std::shared_ptr<const TameGroup> group,
                                             const ResidualFrobenius& frob, bool twisted) {
    return build_conjugation_module(std::move(group), frob, twisted, true,
                                    twisted ? "ad_twisted" : "ad");
}

std::shared_ptr<const GaloisModule> trivial_module(std::shared_ptr<const TameGroup> group) {
    const std::uint32_t ell = group->ell();
    return std::make_shared<const GaloisModule>(group, FpMatrix::identity(1, ell),
                                                FpMatrix::identity(1, ell), "trivial");
}

std::shared_ptr<const GaloisModule> mu_module(std::shared_ptr<const TameGroup> group) {
    const std::uint32_t ell = group->ell();
    FpMatrix aF(1, 1, ell);
    aF.at(0, 0) = group->q();
    return std::make_shared<const GaloisModule>(group, aF, FpMatrix::identity(1, ell), "mu_ell");
}

std::vector<std::vector<std::uint32_t>> fixed_space(const GaloisModule& mod) {
    const std::uint32_t d = mod.dim();
    const std::uint32_t ell = mod.ell();
    FpMatrix stacked(2 * d, d, ell);
    FpMatrix I = FpMatrix::identity(d, ell);
    FpMatrix f = mod.act_frob() - I;
    FpMatrix t = mod.act_tau() - I;
    for (std::uint32_t r = 0; r < d; ++r)
        for (std::uint32_t c = 0; c < d; ++c) {
            stacked.at(r, c) = f.at(r, c);
            stacked.at(d + r, c) = t.at(r, c);
        }
    return row_reduce(stacked).kernel;
}

LatticePoint lattice_act(const TameGroup& group, const TameElement& g, const LatticePoint& x) {
    const std::uint32_t ell = group.ell();
    std::int64_t a_mod = x.a % (std::int64_t)ell;
    if (a_mod < 0) a_mod += ell;
    std::uint64_t inner = (x.c + (std::uint64_t)g.ip * (std::uint64_t)a_mod) % ell;
    std::uint32_t c = (std::uint32_t)((std::uint64_t)group.q_pow(g.i) * inner % ell);
    return LatticePoint{x.a, c};
}

} // namespace galdef
