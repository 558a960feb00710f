#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "galdef/tame_group.hpp"

namespace galdef {

// A subgroup of a TameGroup presented as an indexed element list, so cochain
// tables can be stored flat. Cohomology routines work on views; the full
// group and the tau-cyclic subgroup are the two constructions used here.
class GroupView {
  public:
    static std::shared_ptr<const GroupView> full(std::shared_ptr<const TameGroup> g);
    static std::shared_ptr<const GroupView> tau_cyclic(std::shared_ptr<const TameGroup> g);

    const TameGroup& group() const { return *group_; }
    std::shared_ptr<const TameGroup> group_ptr() const { return group_; }
    std::uint32_t size() const { return (std::uint32_t)elements_.size(); }
    const std::vector<TameElement>& elements() const { return elements_; }
    const TameElement& element(std::uint32_t idx) const { return elements_[idx]; }
    std::uint32_t index_of(const TameElement& g) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t identity_index() const { return id_idx_; }
    std::uint32_t eps(std::uint32_t a) const { return eps_[a]; }

    // indices of a generating set (F and tau for the full view)
    const std::vector<std::uint32_t>& generators() const { return gens_; }

    bool is_full() const { return full_; }

  private:
    GroupView(std::shared_ptr<const TameGroup> g, std::vector<TameElement> elems, bool full);

    std::shared_ptr<const TameGroup> group_;
    std::vector<TameElement> elements_;
    std::vector<std::uint32_t> eps_;
    std::vector<std::uint32_t> gens_;
    std::vector<std::int32_t> lookup_; // (i * ell + ip) -> index or -1
    std::vector<std::uint32_t> inv_;
    std::uint32_t id_idx_ = 0;
    bool full_ = false;
};

} // namespace galdef
