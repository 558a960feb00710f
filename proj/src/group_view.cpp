#include "galdef/group_view.hpp"

namespace galdef {

GroupView::GroupView(std::shared_ptr<const TameGroup> g, std::vector<TameElement> elems, bool full)
    : group_(std::move(g)), elements_(std::move(elems)), full_(full) {
    const TameGroup& G = *group_;
    lookup_.assign((std::size_t)G.m() * G.ell(), -1);
    for (std::uint32_t k = 0; k < elements_.size(); ++k) {
        const TameElement& e = elements_[k];
        lookup_[(std::size_t)e.i * G.ell() + e.ip] = (std::int32_t)k;
    }
    id_idx_ = index_of(G.identity());
    eps_.resize(elements_.size());
    inv_.resize(elements_.size());
    for (std::uint32_t k = 0; k < elements_.size(); ++k) {
        eps_[k] = G.eps(elements_[k]);
        inv_[k] = index_of(G.inverse(elements_[k]));
    }
}

std::uint32_t GroupView::index_of(const TameElement& g) const {
    if (g.gkey != group_->key()) throw invalid_parameters("GroupView: element from a different group");
    std::int32_t idx = lookup_[(std::size_t)g.i * group_->ell() + g.ip];
    if (idx < 0) throw invalid_parameters("GroupView: element not in this subgroup");
    return (std::uint32_t)idx;
}

std::uint32_t GroupView::mul(std::uint32_t a, std::uint32_t b) const {
    return index_of(group_->mul(elements_[a], elements_[b]));
}

std::uint32_t GroupView::inv(std::uint32_t a) const { return inv_[a]; }

std::shared_ptr<const GroupView> GroupView::full(std::shared_ptr<const TameGroup> g) {
    std::vector<TameElement> elems = g->enumerate();
    auto view = std::shared_ptr<GroupView>(new GroupView(g, std::move(elems), true));
    view->gens_ = {view->index_of(g->frobenius()), view->index_of(g->tau())};
    return view;
}

std::shared_ptr<const GroupView> GroupView::tau_cyclic(std::shared_ptr<const TameGroup> g) {
    std::vector<TameElement> elems;
    for (std::uint32_t j = 0; j < g->ell(); ++j) elems.push_back(g->make(0, j));
    auto view = std::shared_ptr<GroupView>(new GroupView(g, std::move(elems), false));
    view->gens_ = {view->index_of(g->tau())};
    return view;
}

} // namespace galdef
