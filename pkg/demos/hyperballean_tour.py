"""Explicit balleans, their axioms, cellularization, and the exp-hyperballean."""

from balleans import (
    ExplicitBallean,
    FiniteSubset,
    cellularization,
    connected_components,
    exp_ball_enumerate_centered_identity,
    exp_hyperballean_of,
    is_cellular,
    mu_report,
    validate_ballean,
)
from balleans.groups import FiniteAbelianGroup


def main() -> None:
    print("== a three-point instance that breaks upper multiplicativity ==")
    b = ExplicitBallean.from_table(
        ["a", "b", "c"], ["r"],
        {("a", "r"): {"a", "b"},
         ("b", "r"): {"a", "b", "c"},
         ("c", "r"): {"b", "c"}})
    print(" ", validate_ballean(b).describe())

    c = cellularization(b)
    print(f"  after cellularization: {validate_ballean(c).describe()}, "
          f"cellular = {is_cellular(c)}")
    print(f"  components: {[sorted(comp) for comp in connected_components(c)]}")

    print("\n== exp-hyperballean of the cellularized instance ==")
    e = exp_hyperballean_of(c)
    print(f"  {len(e.support)} nonempty subsets; exp stays cellular: "
          f"{is_cellular(e)}")

    print("\n== identity-centred exp ball in Z(12) with radius {1, 11} ==")
    g = FiniteAbelianGroup((12,))
    for z in sorted(sorted(x[0] for x in zz)
                    for zz in exp_ball_enumerate_centered_identity(g, [1])):
        print(f"  {z}")

    print("\n== the covering metric between subsets of Z(6) ==")
    y = FiniteSubset.of(g := FiniteAbelianGroup((6,)), [0])
    z = FiniteSubset.of(g, [0, 3])
    rep = mu_report(y, z)
    print(f"  mu({{0}}, {{0,3}}) = {rep.mu.to_json()}, "
          f"single-set variant = {rep.single_set.to_json()}")


if __name__ == "__main__":
    main()
