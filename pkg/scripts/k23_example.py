"""Print the invariants of K_{2,3} and of its minors along the series class {1, 2}."""
from bcmatroid.constructions import Graph, graphic
from bcmatroid.invariants import bc_f_vector, characteristic_polynomial, tutte
from bcmatroid.lab import HCache, check_series1, check_series2, complementary_h, g_vector

# top 0, bottom 1, middle vertices 2, 3, 4
K23 = Graph(5, ((0, 3, 1), (3, 1, 2), (0, 2, 3), (0, 4, 4), (4, 1, 5), (2, 1, 6)))


def main():
    M = graphic(K23)
    cache = HCache()
    S = frozenset({1, 2})
    print("f        ", bc_f_vector(M).entries)
    print("h        ", cache.h(M).trimmed)
    print("chi      ", characteristic_polynomial(M))
    print("Tutte    ", tutte(M, cache.tutte))
    print("hbar     ", complementary_h(M, cache).entries)
    print("g        ", g_vector(M, cache).entries)
    print("series   ", [sorted(c) for c in M.series_classes()])
    for name, N in [("M/1", M.contract([1])), ("M-S", M.delete(S)), ("M/S", M.contract(S))]:
        print(f"h({name})".ljust(9), cache.h(N).trimmed)
    print("three-term identity holds:", check_series1(M, S, 1, cache).ok)
    print("three-branch identity holds:", check_series2(M, S, 1, cache).ok)


if __name__ == "__main__":
    main()
