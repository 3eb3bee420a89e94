#pragma once

#include <algorithm>
#include <vector>

namespace ttsupp {

// Finite-or-cofinite subset of an infinite ordered universe. `elems` is the
// set itself (finite mode) or its complement (cofinite mode); always sorted
// and duplicate-free, so structural equality is set equality.
template <class T, class Less = std::less<T>>
struct FinCof {
    bool cofinite = false;
    std::vector<T> elems;

    static FinCof none() { return {false, {}}; }
    static FinCof all() { return {true, {}}; }
    static FinCof of(std::vector<T> v) {
        FinCof r{false, std::move(v)};
        r.normalize();
        return r;
    }

    void normalize() {
        std::sort(elems.begin(), elems.end(), Less{});
        elems.erase(std::unique(elems.begin(), elems.end(),
                                [](const T& a, const T& b) { return !Less{}(a, b) && !Less{}(b, a); }),
                    elems.end());
    }

    bool is_empty() const { return !cofinite && elems.empty(); }
    bool is_all() const { return cofinite && elems.empty(); }
    bool is_finite() const { return !cofinite; }

    bool contains(const T& x) const {
        bool listed = std::binary_search(elems.begin(), elems.end(), x, Less{});
        return cofinite ? !listed : listed;
    }

    bool operator==(const FinCof& o) const { return cofinite == o.cofinite && elems == o.elems; }

    FinCof complement() const { return {!cofinite, elems}; }

    static std::vector<T> vec_union(const std::vector<T>& a, const std::vector<T>& b) {
        std::vector<T> r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), Less{});
        return r;
    }
    static std::vector<T> vec_inter(const std::vector<T>& a, const std::vector<T>& b) {
        std::vector<T> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), Less{});
        return r;
    }
    static std::vector<T> vec_diff(const std::vector<T>& a, const std::vector<T>& b) {
        std::vector<T> r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), Less{});
        return r;
    }

    FinCof set_union(const FinCof& o) const {
        if (!cofinite && !o.cofinite) return {false, vec_union(elems, o.elems)};
        if (cofinite && o.cofinite) return {true, vec_inter(elems, o.elems)};
        if (cofinite) return {true, vec_diff(elems, o.elems)};
        return {true, vec_diff(o.elems, elems)};
    }

    FinCof set_inter(const FinCof& o) const { return complement().set_union(o.complement()).complement(); }

    FinCof set_diff(const FinCof& o) const { return set_inter(o.complement()); }

    bool subset_of(const FinCof& o) const { return set_diff(o).is_empty(); }
};

} // namespace ttsupp
