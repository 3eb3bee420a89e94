#include <catch2/catch_amalgamated.hpp>

#include "ttsupp/rng.hpp"
#include "ttsupp/topology.hpp"

using namespace ttsupp;
using namespace ttsupp::topo;

namespace {

Space chain_ab() { return make_finite_poset({"a", "b"}, {{"a", "b"}}); }

Space column() { return SpChromaticColumn{}; }
Space sinf() { return SpSInfinity{}; }
Space plane() { return SpChromaticPlane{}; }
Space fanZ() { return SpFanSpace{{EuclideanDomain::Kind::Z, 0}}; }

Subset col_heights(std::vector<std::uint32_t> hs, bool inf) {
    return SubColumn{{FinCof<std::uint32_t>::of(std::move(hs)), inf}};
}

// random finite poset on n points with label p0..p{n-1}
Space random_poset(Rng& rng, int n) {
    std::vector<std::string> pts;
    for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(3) == 0) pairs.push_back({pts[i], pts[j]}); // i < j keeps it acyclic
    return make_finite_poset(pts, pairs);
}

Subset random_subset(Rng& rng, const Space& sp) {
    switch (kind_of(sp)) {
        case Kind::FinitePoset: {
            const auto& poset = std::get<SpFinitePoset>(sp);
            std::vector<std::string> pts;
            for (const auto& p : poset.points)
                if (rng.coin()) pts.push_back(p);
            return SubPoset{pts};
        }
        case Kind::SInfinity: {
            std::vector<std::string> ls;
            for (int i = 0; i < 6; ++i)
                if (rng.coin()) ls.push_back("s" + std::to_string(rng.below(10)));
            return SubSInf{{rng.coin(), FinCof<std::string>::of(ls).elems}, rng.coin()};
        }
        case Kind::ChromaticColumn: {
            std::vector<std::uint32_t> hs;
            for (int i = 0; i < 6; ++i)
                if (rng.coin()) hs.push_back(static_cast<std::uint32_t>(rng.below(12)));
            return SubColumn{{{rng.coin(), FinCof<std::uint32_t>::of(hs).elems}, rng.coin()}};
        }
        case Kind::ChromaticPlane: {
            auto rand_col = [&]() {
                std::vector<std::uint32_t> hs;
                for (int i = 0; i < 4; ++i)
                    if (rng.coin()) hs.push_back(1 + static_cast<std::uint32_t>(rng.below(8)));
                return ColDesc{{rng.coin(), FinCof<std::uint32_t>::of(hs).elems}, rng.coin()};
            };
            SubPlane s{rand_col(), {}, rng.coin()};
            std::int64_t primes[] = {2, 3, 5};
            for (auto p : primes)
                if (rng.coin()) s.exc[p] = rand_col();
            s.normalize();
            return s;
        }
        case Kind::FanSpace: {
            const auto& fan = std::get<SpFanSpace>(sp);
            std::vector<DElem> ps;
            for (int i = 0; i < 4; ++i)
                if (rng.coin()) ps.push_back(nth_prime(fan.base, static_cast<int>(rng.below(6))));
            return SubFan{{rng.coin(), FinCof<DElem, DElemLess>::of(ps).elems}, rng.coin()};
        }
    }
    throw std::logic_error("kind");
}

std::vector<Space> all_models() {
    return {chain_ab(), sinf(), column(), plane(), fanZ()};
}

} // namespace

TEST_CASE("closure basics") {
    // up-set of the order
    Space p = chain_ab();
    CHECK(subset_eq(closure(p, SubPoset{{"a"}}), Subset{SubPoset{{"a", "b"}}}));
    // cl{height 3} = [3, inf]
    Space c = column();
    Subset cl3 = closure(c, col_heights({3}, false));
    CHECK(contains_point(c, cl3, Point{PtColumn{3}}));
    CHECK(contains_point(c, cl3, Point{PtColumn{7}}));
    CHECK(contains_point(c, cl3, Point{PtColumn{kInfHeight}}));
    CHECK(!contains_point(c, cl3, Point{PtColumn{2}}));
    // empty set is fixed
    for (const auto& sp : all_models()) CHECK(is_empty(closure(sp, empty_subset(sp))));
}

TEST_CASE("gen") {
    Space f = fanZ();
    DElem p5 = de_int(5);
    Subset g = gen(f, Point{PtFan{false, p5}});
    CHECK(contains_point(f, g, Point{PtFan{true, de_int(0)}}));
    CHECK(contains_point(f, g, Point{PtFan{false, p5}}));
    CHECK(!contains_point(f, g, Point{PtFan{false, de_int(2)}}));

    CHECK(subset_eq(gen(f, Point{PtFan{true, de_int(0)}}),
                    singleton(f, Point{PtFan{true, de_int(0)}})));

    // gen of the top column point is the whole column, and matches closure
    Space c = column();
    CHECK(is_whole(c, gen(c, Point{PtColumn{kInfHeight}})));
    for (std::uint32_t h = 0; h < 6; ++h) {
        Subset cl = closure(c, col_heights({h}, false));
        CHECK(contains_point(c, cl, Point{PtColumn{kInfHeight}}));
    }
}

TEST_CASE("is_thomason") {
    Space f = fanZ();
    CHECK(is_thomason(f, SubFan{FinCof<DElem, DElemLess>::of({de_int(2), de_int(7)}), false}));
    CHECK(!is_thomason(f, SubFan{FinCof<DElem, DElemLess>::none(), true})); // {generic}
    Space c = column();
    CHECK(!is_thomason(c, col_heights({}, true))); // {inf}
    CHECK(is_thomason(c, closure(c, col_heights({4}, false))));
    CHECK(is_thomason(c, empty_subset(c)));
    CHECK(is_thomason(c, whole_subset(c)));
}

TEST_CASE("hochster dual") {
    Space p = chain_ab();
    SpFinitePoset d = hochster_dual(p);
    CHECK(d.le[1][0]); // b <= a reversed
    CHECK(!d.le[0][1]);
    // involution on random posets
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Space q = random_poset(rng, 5);
        SpFinitePoset dd = hochster_dual(Space{hochster_dual(q)});
        CHECK(dd.le == std::get<SpFinitePoset>(q).le);
    }
    // dual-open sets equal Thomason sets of the original: a set is Thomason
    // in X iff its complement is specialization closed in the dual
    for (int i = 0; i < 10; ++i) {
        Space q = random_poset(rng, 5);
        Space dq = Space{hochster_dual(q)};
        for (const auto& t : poset_thomason_subsets(q)) {
            Subset c = complement(q, t);
            CHECK(subset_eq(closure(dq, c), c));
        }
    }
    CHECK_THROWS_AS(hochster_dual(column()), unsupported_error);
}

TEST_CASE("weakly visible witnesses") {
    Space c = column();
    // {height 3} = cl{3} \ cl{4}
    auto w = weakly_visible_witness(c, col_heights({3}, false));
    REQUIRE(w);
    CHECK(subset_eq(w->u, closure(c, col_heights({3}, false))));
    CHECK(subset_eq(w->v, closure(c, col_heights({4}, false))));
    CHECK(is_thomason(c, w->u));
    CHECK(is_thomason(c, w->v));
    CHECK(subset_eq(set_diff(c, w->u, w->v), col_heights({3}, false)));
    // {inf} is not weakly visible
    CHECK(!weakly_visible_witness(c, col_heights({}, true)));
    // non-interval finite sets are not weakly visible (they are unions of
    // weakly visible sets, not basis elements)
    CHECK(!weakly_visible_witness(c, col_heights({1, 3}, false)));

    // finite posets: singletons always
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Space q = random_poset(rng, 5);
        for (const auto& pt : std::get<SpFinitePoset>(q).points) {
            auto ws = weakly_visible_witness(q, singleton(q, Point{PtPoset{pt}}));
            REQUIRE(ws);
            CHECK(is_thomason(q, ws->u));
            CHECK(is_thomason(q, ws->v));
            CHECK(subset_eq(set_diff(q, ws->u, ws->v), singleton(q, Point{PtPoset{pt}})));
        }
    }
    // chain a<b<c: {a,c} is not weakly visible
    Space abc = make_finite_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(!weakly_visible_witness(abc, SubPoset{{"a", "c"}}));
}

TEST_CASE("witness validity on random subsets") {
    Rng rng(99);
    for (const auto& sp : all_models()) {
        for (int i = 0; i < 200; ++i) {
            Subset s = random_subset(rng, sp);
            auto w = weakly_visible_witness(sp, s);
            if (w) {
                CHECK(is_thomason(sp, w->u));
                CHECK(is_thomason(sp, w->v));
                CHECK(subset_eq(set_diff(sp, w->u, w->v), s));
            }
        }
    }
}

TEST_CASE("weakly visible closed under finite intersection") {
    Rng rng(123);
    for (const auto& sp : all_models()) {
        for (int i = 0; i < 200; ++i) {
            Subset a = random_subset(rng, sp), b = random_subset(rng, sp);
            auto wa = weakly_visible_witness(sp, a);
            auto wb = weakly_visible_witness(sp, b);
            if (wa && wb) {
                Subset inter = set_inter(sp, a, b);
                auto wi = weakly_visible_witness(sp, inter);
                REQUIRE(wi);
                // compose witnesses: (Ua inter Ub) \ (Va union Vb)
                Subset u = set_inter(sp, wa->u, wb->u);
                Subset v = set_union(sp, wa->v, wb->v);
                CHECK(subset_eq(set_diff(sp, u, v), inter));
            }
        }
    }
}

TEST_CASE("weakly noetherian") {
    CHECK(is_weakly_noetherian(sinf()).ok);
    CHECK(is_weakly_noetherian(fanZ()).ok);
    CHECK(is_weakly_noetherian(chain_ab()).ok);
    auto v = is_weakly_noetherian(column());
    CHECK(!v.ok);
    REQUIRE(v.counterexample);
    CHECK(std::get<PtColumn>(*v.counterexample).height == kInfHeight);
    auto vp = is_weakly_noetherian(plane());
    CHECK(!vp.ok);
    CHECK(std::get<PtPlane>(*vp.counterexample).height == kInfHeight);
}

TEST_CASE("localizing closure and closedness") {
    Space c = column();
    // finite sets of finite heights are fixed
    CHECK(subset_eq(localizing_closure(c, col_heights({0, 2, 4}, false)), col_heights({0, 2, 4}, false)));
    // cofinite sets without inf pick up inf
    Subset cof = SubColumn{{FinCof<std::uint32_t>{true, {0, 1}}, false}};
    Subset closed = localizing_closure(c, cof);
    CHECK(contains_point(c, closed, Point{PtColumn{kInfHeight}}));
    CHECK(subset_eq(closed, Subset{SubColumn{{FinCof<std::uint32_t>{true, {0, 1}}, true}}}));
    CHECK(!is_localizing_closed(c, cof));
    CHECK(is_localizing_closed(c, closed));
    // characterization: closed iff inf in S or S finite (500 random descriptors)
    Rng rng(500);
    for (int i = 0; i < 500; ++i) {
        Subset s = random_subset(rng, c);
        const auto& d = std::get<SubColumn>(s).desc;
        bool expect = d.has_inf || d.heights.is_finite();
        CHECK(is_localizing_closed(c, s) == expect);
    }
    // s_infinity is discrete
    Space si = sinf();
    for (int i = 0; i < 100; ++i) {
        Subset s = random_subset(rng, si);
        CHECK(subset_eq(localizing_closure(si, s), s));
    }
    // plane: the inf point of every column is localizing closed
    Space pl = plane();
    Subset tops = SubPlane{{FinCof<std::uint32_t>::none(), true}, {}, false};
    CHECK(is_localizing_closed(pl, tops));
    // whole space is localizing closed everywhere
    for (const auto& sp : all_models()) CHECK(is_localizing_closed(sp, whole_subset(sp)));
}

TEST_CASE("closure operators: extensive, monotone, idempotent; chain of closures") {
    Rng rng(2024);
    for (const auto& sp : all_models()) {
        for (int i = 0; i < 200; ++i) {
            Subset s = random_subset(rng, sp), t = random_subset(rng, sp);
            Subset su = set_union(sp, s, t); // s <= su
            for (auto op : {&closure, &localizing_closure}) {
                Subset cs = op(sp, s);
                CHECK(subset_le(sp, s, cs));
                CHECK(subset_eq(op(sp, cs), cs));
                CHECK(subset_le(sp, cs, op(sp, su)));
            }
            CHECK(subset_le(sp, localizing_closure(sp, s), closure(sp, s)));
        }
    }
}

TEST_CASE("constructible discreteness") {
    CHECK(is_constructible_discrete(chain_ab()));
    CHECK(!is_constructible_discrete(sinf()));
    CHECK(!is_constructible_discrete(column()));
}

TEST_CASE("weakly isolated witnesses") {
    Space c = column();
    // dual-closed complement of cl{n}: witness (n-1, cl{n-1})
    for (std::uint32_t n = 1; n <= 5; ++n) {
        Subset y = closure(c, col_heights({n}, false));
        auto w = weakly_isolated_witness(c, complement(c, y));
        REQUIRE(w);
        CHECK(std::get<PtColumn>(w->x).height == n - 1);
        CHECK(subset_eq(w->u, closure(c, col_heights({n - 1}, false))));
        // chain of inclusions {x} <= U inter s <= gen(x)
        Subset us = set_inter(c, w->u, complement(c, y));
        CHECK(subset_le(c, singleton(c, w->x), us));
        CHECK(subset_le(c, us, gen(c, w->x)));
    }
    // whole dual space: none
    CHECK(!weakly_isolated_witness(c, whole_subset(c)));
    CHECK_THROWS_AS(weakly_isolated_witness(c, empty_subset(c)), input_error);
    // chain a<b, whole space
    Space p = chain_ab();
    auto w = weakly_isolated_witness(p, whole_subset(p));
    REQUIRE(w);
    Subset us = set_inter(p, w->u, whole_subset(p));
    CHECK(subset_le(p, singleton(p, w->x), us));
    CHECK(subset_le(p, us, gen(p, w->x)));
}

TEST_CASE("hochster weakly scattered") {
    auto vc = is_hochster_weakly_scattered(column());
    CHECK(!vc.ok);
    REQUIRE(vc.failing_thomason);
    CHECK(is_empty(*vc.failing_thomason));

    CHECK(is_hochster_weakly_scattered(fanZ()).ok);
    CHECK(is_hochster_weakly_scattered(sinf()).ok);
    CHECK(!is_hochster_weakly_scattered(plane()).ok);

    Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        Space q = random_poset(rng, 5);
        auto v = is_hochster_weakly_scattered(q);
        CHECK(v.ok);
        for (auto& [y, w] : v.witnesses) {
            Subset s = complement(q, y);
            Subset us = set_inter(q, w.u, s);
            CHECK(subset_le(q, singleton(q, w.x), us));
            CHECK(subset_le(q, us, gen(q, w.x)));
        }
    }
}

TEST_CASE("hochster scattered factorization") {
    for (const auto& sp : all_models()) {
        auto v = is_hochster_scattered(sp);
        CHECK(v.ok == (v.wn.ok && v.hws.ok));
    }
    CHECK(is_hochster_scattered(fanZ()).ok);
    CHECK(!is_hochster_scattered(column()).ok);
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        Space q = random_poset(rng, static_cast<int>(3 + rng.below(6)));
        auto v = is_hochster_scattered(q, 8);
        CHECK(v.ok == (v.wn.ok && v.hws.ok));
        CHECK(v.ok); // finite spaces are always Hochster scattered
    }
}

TEST_CASE("non localizing closed witness") {
    auto w = non_localizing_closed_witness(column());
    REQUIRE(w);
    CHECK(!is_localizing_closed(column(), *w));
    CHECK(!non_localizing_closed_witness(fanZ()));
    CHECK(!non_localizing_closed_witness(sinf()));
    CHECK(!non_localizing_closed_witness(chain_ab()));
    auto wp = non_localizing_closed_witness(plane());
    REQUIRE(wp);
    CHECK(!is_localizing_closed(plane(), *wp));
}

TEST_CASE("finite poset brute force: thomason = specialization closed, weakly visible = differences") {
    Rng rng(8);
    for (int i = 0; i < 15; ++i) {
        Space q = random_poset(rng, 5);
        const auto& poset = std::get<SpFinitePoset>(q);
        size_t n = poset.points.size();
        // enumerate all subsets: Thomason iff specialization closed
        auto family = poset_thomason_subsets(q);
        size_t closed_count = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::string> pts;
            for (size_t k = 0; k < n; ++k)
                if ((mask >> k) & 1) pts.push_back(poset.points[k]);
            Subset s = SubPoset{pts};
            bool spec_closed = subset_eq(closure(q, s), s);
            CHECK(is_thomason(q, s) == spec_closed);
            if (spec_closed) ++closed_count;
        }
        CHECK(closed_count == family.size());
        // weakly visible family = differences of Thomason sets, and the
        // localizing topology is discrete (every singleton weakly visible)
        auto wv = poset_weakly_visible_family(q);
        for (const auto& s : wv) {
            auto w = weakly_visible_witness(q, s);
            REQUIRE(w);
        }
        for (const auto& pt : poset.points)
            CHECK(weakly_visible_witness(q, singleton(q, Point{PtPoset{pt}})).has_value());
    }
}

TEST_CASE("subset algebra: de morgan, involution") {
    Rng rng(4242);
    for (const auto& sp : all_models()) {
        for (int i = 0; i < 100; ++i) {
            Subset a = random_subset(rng, sp), b = random_subset(rng, sp);
            CHECK(subset_eq(complement(sp, complement(sp, a)), a));
            CHECK(subset_eq(complement(sp, set_union(sp, a, b)),
                            set_inter(sp, complement(sp, a), complement(sp, b))));
            CHECK(subset_eq(complement(sp, set_inter(sp, a, b)),
                            set_union(sp, complement(sp, a), complement(sp, b))));
        }
    }
}

TEST_CASE("input validation") {
    Space p = chain_ab();
    CHECK_THROWS_AS(validate(p, Subset{SubPoset{{"zz"}}}), input_error);
    CHECK_THROWS_AS(make_finite_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), input_error);
    CHECK_THROWS_AS(validate(plane(), Subset{SubPlane{{FinCof<std::uint32_t>::of({0}), false}, {}, false}}),
                    input_error);
    CHECK_THROWS_AS(closure(p, Subset{SubColumn{}}), input_error);
}
