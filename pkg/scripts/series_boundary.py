"""List every place where the three-term series-class identity fails when the
complementary h-vector of M/e is truncated at its own middle index, and show
that the untruncated M/e term closes the gap."""
import argparse

from bcmatroid.lab import HCache, series1_terms
from bcmatroid.sweep import family_matroids


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-edges", type=int, default=7)
    args = ap.parse_args(argv)
    cache = HCache()
    checked = failed = 0
    for ident, M in family_matroids("graphic", max_edges=args.max_edges):
        if M.size < 2 or not M.is_connected():
            continue
        for S in M.removable_series_classes():
            if len(S) < 2:
                continue
            for e in sorted(S):
                checked += 1
                lhs, rhs = series1_terms(M, S, e, cache)
                if lhs != rhs:
                    failed += 1
                    _, alt = series1_terms(M, S, e, cache, convention="unrestricted")
                    s = cache.h(M).s
                    bad = [i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b]
                    print(f"{ident} S={sorted(S)} e={e} h={cache.h(M).trimmed} s={s} "
                          f"indices={bad} lhs={lhs} rhs={rhs} untruncated={alt}")
    print(f"{failed} of {checked} instances differ")


if __name__ == "__main__":
    main()
