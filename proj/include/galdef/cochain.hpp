#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "galdef/galois_modules.hpp"
#include "galdef/group_view.hpp"
#include "galdef/rng.hpp"

namespace galdef {

// Inhomogeneous bar cochain of degree 0, 1 or 2 on a group view with values
// in a GaloisModule. Storage is a flat table indexed by element tuples.
struct Cochain {
    std::uint32_t degree = 0;
    std::shared_ptr<const GroupView> view;
    std::shared_ptr<const GaloisModule> module;
    std::vector<std::uint32_t> values;

    static Cochain zero(std::shared_ptr<const GroupView> view,
                        std::shared_ptr<const GaloisModule> module, std::uint32_t degree);
    static Cochain random(std::shared_ptr<const GroupView> view,
                          std::shared_ptr<const GaloisModule> module, std::uint32_t degree,
                          SplitMix64& rng);

    std::uint32_t dim() const { return module->dim(); }
    std::uint32_t n() const { return view->size(); }

    const std::uint32_t* at1(std::uint32_t g) const { return &values[(std::size_t)g * dim()]; }
    std::uint32_t* at1(std::uint32_t g) { return &values[(std::size_t)g * dim()]; }
    const std::uint32_t* at2(std::uint32_t g, std::uint32_t h) const {
        return &values[((std::size_t)g * n() + h) * dim()];
    }
    std::uint32_t* at2(std::uint32_t g, std::uint32_t h) {
        return &values[((std::size_t)g * n() + h) * dim()];
    }

    std::vector<std::uint32_t> get1(std::uint32_t g) const;
    std::vector<std::uint32_t> get2(std::uint32_t g, std::uint32_t h) const;
    void set1(std::uint32_t g, const std::vector<std::uint32_t>& v);
    void set2(std::uint32_t g, std::uint32_t h, const std::vector<std::uint32_t>& v);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(std::uint32_t factor) const;
    bool operator==(const Cochain& o) const;
    bool is_zero() const;
};

// Differential of the inhomogeneous complex:
//   (d0 m)(g)    = g.m - m
//   (d1 b)(g,h)  = g.b(h) - b(gh) + b(g)
// Degree-2 input has no materialized target; use is_cocycle for the
// degree-3 identity.
Cochain coboundary(const Cochain& c);

struct CocycleCheck {
    bool ok = true;
    bool exhaustive = true;
    std::array<std::uint32_t, 3> witness{0, 0, 0};
    std::uint64_t checked = 0;
};

// Degree 1: exact test d1(c) = 0. Degree 2: the pointwise identity
//   g.u(h,k) - u(gh,k) + u(g,hk) - u(g,h) = 0,
// exhaustive when |view|^3 <= triple_budget, otherwise a seeded sample.
CocycleCheck is_cocycle(const Cochain& c, std::uint64_t triple_budget = 30000000,
                        std::uint64_t seed = 1, std::uint64_t samples = 100000);

// Per-element action matrices of the module on the view, index-aligned.
std::vector<FpMatrix> action_table(const GroupView& view, const GaloisModule& module);

} // namespace galdef
