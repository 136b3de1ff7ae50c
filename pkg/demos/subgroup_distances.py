"""Tour of the exact subgroup distance on sublattices of Z^n.

Distances between commensurable subgroups are exact integers mu' =
max(|A : A cap B|, |B : A cap B|); the logarithm is display-only.
"""

from balleans import (
    commensurable,
    lattice_from_generators,
    log_subgroup_distance,
    saturation,
)


def main() -> None:
    print("== subgroups of Z ==")
    for n, m in [(2, 3), (24, 18), (6, 12)]:
        a = lattice_from_generators(1, [[n]])
        b = lattice_from_generators(1, [[m]])
        d = log_subgroup_distance(a, b)
        print(f"  d({n}Z, {m}Z): mu' = {d.to_json()}, log = {d.log():.4f}")

    print("\n== subgroups of Z^2 ==")
    a = lattice_from_generators(2, [[2, 0], [0, 2]])
    b = lattice_from_generators(2, [[3, 0], [0, 1]])
    print(f"  2Z^2 vs (3Z x Z): mu' = {log_subgroup_distance(a, b).to_json()}")

    h = lattice_from_generators(2, [[2, 4]])
    k = lattice_from_generators(2, [[3, 6]])
    print(f"  <(2,4)> vs <(3,6)>: commensurable = {commensurable(h, k)}, "
          f"mu' = {log_subgroup_distance(h, k).to_json()}")
    print(f"  both saturate to {saturation(h).basis} — same connected component")

    v = lattice_from_generators(2, [[1, 0]])
    print(f"  <(2,4)> vs <(1,0)>: mu' = {log_subgroup_distance(h, v).to_json()} "
          "(different saturations, different components)")


if __name__ == "__main__":
    main()
