import random

from barjanet import (
    INF,
    CornerVector,
    Term,
    TermSet,
    box_terms,
    complete,
    infinite_corners,
    janet_like_divisors,
    multiplicative_variables,
    nmp_table,
    parse_term,
    parse_term_set,
)
from helpers import in_semigroup_ideal, random_term_set


# k[x, y] with x below y: x = x1, y = x2
PLANE = parse_term_set("vars: 2\nx2^3\nx1*x2\nx1^2\n")


def p2(text):
    return parse_term(text, 2)


class TestPlaneExample:
    def test_top_term_unbounded(self):
        corners = infinite_corners(PLANE)
        assert corners[p2("x2^3")] == CornerVector((INF, INF))

    def test_middle_term(self):
        corners = infinite_corners(PLANE)
        assert corners[p2("x1*x2")] == CornerVector((INF, 2))

    def test_bottom_term(self):
        # the cone of x1^2 admits no extra power of x2 at all
        corners = infinite_corners(PLANE)
        assert corners[p2("x1^2")] == CornerVector((INF, 0))


class TestGeneralProperties:
    def test_singleton_all_infinite(self):
        ts = TermSet(3, [Term((1, 2, 0))])
        vec = infinite_corners(ts)[Term((1, 2, 0))]
        assert vec.entries == (INF, INF, INF)

    def test_infinite_iff_multiplicative(self):
        rng = random.Random(211)
        for _ in range(100):
            ts = random_term_set(rng, max_vars=4, max_terms=15, max_exp=4)
            corners = infinite_corners(ts)
            for t in ts:
                mult = multiplicative_variables(ts, t)
                for i in range(1, ts.nvars + 1):
                    assert corners[t].is_infinite(i) == (i in mult)

    def test_lex_max_gets_all_infinite(self):
        rng = random.Random(223)
        for _ in range(100):
            ts = random_term_set(rng, max_vars=4, max_terms=15, max_exp=4)
            top = ts.terms[-1]
            assert infinite_corners(ts)[top].entries == (INF,) * ts.nvars

    def test_finite_entries_describe_cone_membership(self):
        rng = random.Random(227)
        for _ in range(30):
            ts = random_term_set(rng, max_vars=3, max_terms=8, max_exp=3)
            done, _ = complete(ts)
            table = nmp_table(done)
            corners = infinite_corners(done, table)
            bounds = tuple(b + 1 for b in done.bounding_box())
            for t in done:
                vec = corners[t]
                ann = table[t]
                for v in box_terms(bounds):
                    if not t.divides(v):
                        continue
                    q = v / t
                    ok_direction = all(
                        q.deg(i) == 0
                        or vec.is_infinite(i)
                        or v.deg(i) <= vec.entries[i - 1]
                        for i in range(1, done.nvars + 1)
                    )
                    if ok_direction:
                        assert t in janet_like_divisors(done, v, table)

    def test_cones_tile_ideal_on_complete_sets(self):
        rng = random.Random(229)
        for _ in range(30):
            ts = random_term_set(rng, max_vars=3, max_terms=8, max_exp=3)
            done, _ = complete(ts)
            table = nmp_table(done)
            bounds = tuple(b + 2 for b in done.bounding_box())
            for w in box_terms(bounds):
                count = len(janet_like_divisors(done, w, table))
                assert count == (1 if in_semigroup_ideal(done, w) else 0)

    def test_text_form(self):
        assert CornerVector((INF, 2)).format() == "x1^inf*x2^2"
        assert CornerVector((3, INF, 0)).format() == "x1^3*x2^inf*x3^0"
