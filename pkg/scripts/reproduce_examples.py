"""Print the small worked instances: the two-block partition, its incidence
matrices, the 3x6 matrix whose matroid depends on the field, and the signed
matrix whose relation over Q is not transitive."""

from roughmat.binrel import is_binary_dependence, is_equivalence, iso_f, relation_from_matrix
from roughmat.fields import GF2, Q
from roughmat.formats import format_family, format_matrix
from roughmat.linalg import ExactMatrix, determinant, enumerate_solutions, null_space_basis, solve_ones
from roughmat.matroid import (
    VectorMatroid,
    bases,
    bases_via_ones,
    circuits,
    independent_sets,
    matroids_equal,
    support,
)
from roughmat.roughsets import Partition, Universe, encode_matrix, lower_approx, upper_approx, upper_full_sets


def section(title):
    print(f"\n== {title}")


def main():
    U = Universe.of_size(5)
    P = Partition.from_labels(U, [["x1", "x3"], ["x2", "x4", "x5"]])
    X = U.subset(["x1", "x2", "x3"])

    section("approximations of {x1,x2,x3}")
    print("lower:", lower_approx(P, X))
    print("upper:", upper_approx(P, X))

    section("block-incidence matrix, canonical order")
    B = encode_matrix(P)
    print(format_matrix(B), end="")
    U2 = Universe(("x1", "x3", "x2", "x4", "x5"))
    P2 = Partition.from_labels(U2, [["x1", "x3"], ["x2", "x4", "x5"]])
    section("reordered universe, then reordered blocks")
    print(format_matrix(encode_matrix(P2)), end="")
    print(format_matrix(encode_matrix(P2, row_order=[1, 0])), end="")
    print("same matroid over Q and GF(2):", matroids_equal(VectorMatroid(encode_matrix(P, Q)), VectorMatroid(B)))

    section("independent sets of the 2x5 matrix over Q")
    A1 = ExactMatrix.from_rows(Q, [[1, 0, 1, 0, 0], [0, 1, 0, 1, 1]], list("12345"))
    I = independent_sets(VectorMatroid(A1))
    print(len(I), "sets:", I)

    section("kernel and Ax = 1 over GF(2)")
    for v in enumerate_solutions(null_space_basis(B)):
        print("N:", v.components, "support", support(v, U))
    for v in enumerate_solutions(solve_ones(B)):
        print("I:", v.components, "support", support(v, U))
    print("circuits =", iso_f(P))
    print("bases via Ax = 1 =", bases_via_ones(B))
    print("sets meeting every block:", len(upper_full_sets(P)))

    section("3x6 matrix over two fields")
    rows = [[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]]
    for spec in (Q, GF2):
        A = ExactMatrix.from_rows(spec, rows)
        sub = ExactMatrix.from_rows(spec, [r[3:] for r in rows])
        M = VectorMatroid(A)
        print(f"{spec}: det[x4 x5 x6] = {determinant(sub)}, {len(circuits(M))} circuits, {len(bases(M))} bases")
        print(format_family(circuits(M)), end="")
    verdict = is_binary_dependence(ExactMatrix.from_rows(GF2, rows))
    print("binary dependence over GF(2):", verdict.is_member, verdict.witness, verdict.reason)

    section("signed 2x3 matrix")
    for spec in (Q, GF2):
        R = relation_from_matrix(ExactMatrix.from_rows(spec, [[1, -1, 1], [1, -1, 1]]))
        print(f"{spec}: pairs {R.label_pairs()} equivalence={is_equivalence(R)}")


if __name__ == "__main__":
    main()
