"""Argument parser for the qexp command line."""

import argparse

GROUP_KINDS = ("sl3k_f2", "cyclic", "symmetric_group", "custom_perm")


def _solver_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("solver")
    group.add_argument("--tol", type=float, help="convergence tolerance of iterative solves")
    group.add_argument("--max-iter", type=int, dest="max_iter", help="iteration cap")
    group.add_argument(
        "--dense-threshold",
        type=int,
        dest="dense_threshold",
        help="operator dimension at or below which dense solves are used",
    )
    group.add_argument(
        "--method", choices=("auto", "dense", "iterative"), default="auto"
    )
    group.add_argument("--solver-seed", type=int, dest="solver_seed")
    parser.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    """Build the parser; every subcommand shares the solver and format options."""
    parser = argparse.ArgumentParser(
        prog="qexp",
        description="Spectral gaps of unitary tuples, group representations and packings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gap = sub.add_parser("gap", help="spectral gap of a tuple or representation")
    source = gap.add_mutually_exclusive_group(required=True)
    source.add_argument("--tuple", dest="tuple_path", metavar="FILE")
    source.add_argument("--pauli2", action="store_true", help="the Pauli 4-tuple {I, X, Y, Z}")
    source.add_argument("--identity", action="store_true", help="n copies of the identity")
    source.add_argument("--random", nargs=3, type=int, metavar=("N", "DIM", "SEED"))
    gap.add_argument("--n", type=int, default=1)
    gap.add_argument("--dim", type=int, default=2)
    gap.add_argument("--mode", choices=("tuple", "rep", "tensor"), default="tuple")
    _solver_options(gap)

    pair = sub.add_parser("pair-norm", help="||sum u_j (x) conj(v_j)|| for two tuples")
    pair.add_argument("a", metavar="A", nargs="?")
    pair.add_argument("b", metavar="B", nargs="?")
    pair.add_argument(
        "--builtin",
        action="store_true",
        help="the Pauli 4-tuple against four identities on C^2",
    )
    _solver_options(pair)

    inter = sub.add_parser("intertwiner", help="dimension of the intertwiner space of two tuples")
    inter.add_argument("a", metavar="A")
    inter.add_argument("b", metavar="B")
    _solver_options(inter)

    cayley = sub.add_parser("cayley", help="Cayley-graph gap of a finite group")
    cayley.add_argument("--group", choices=GROUP_KINDS)
    cayley.add_argument("--k", type=int)
    cayley.add_argument("--m", type=int)
    cayley.add_argument("--generators", metavar="FILE", help="JSON list of permutations")
    cayley.add_argument("--spec", dest="spec_path", metavar="FILE", help="group spec JSON")
    _solver_options(cayley)

    koopman = sub.add_parser("koopman", help="Koopman representation of SL_3k(F_2)")
    koopman.add_argument("--k", type=int, required=True)
    koopman.add_argument("--output", metavar="FILE", help="write the representation tuple here")
    _solver_options(koopman)

    pack = sub.add_parser("pack", help="greedy eps-separated family of eps-expanders")
    pack.add_argument("--n", type=int, required=True)
    pack.add_argument("--dim", type=int, required=True)
    pack.add_argument("--eps", type=float, required=True)
    pack.add_argument("--candidates", type=int, required=True)
    pack.add_argument("--seed", type=int, default=0)
    pack.add_argument("--symmetric", action="store_true")
    pack.add_argument("--threads", type=int)
    pack.add_argument("--output", metavar="FILE")
    pack.add_argument("--save-tuples", action="store_true", dest="save_tuples")
    _solver_options(pack)

    assemble = sub.add_parser("assemble", help="direct sum of a packing's kept tuples")
    assemble.add_argument("packing", metavar="PACKING")
    assemble.add_argument("--output", metavar="FILE")
    _solver_options(assemble)

    certify = sub.add_parser("certify", help="re-certify a packing from scratch")
    certify.add_argument("packing", metavar="PACKING")
    certify.add_argument("--eps", type=float, help="threshold (defaults to the packing's)")
    _solver_options(certify)

    bound = sub.add_parser("bound", help="log of the volume packing bound")
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--dim", type=int, required=True)
    bound.add_argument("--eps", type=float, required=True)
    _solver_options(bound)

    ring = sub.add_parser("ring", help="size of the subring of M_k(F_2) generated by {e_12, shift}")
    ring.add_argument("--k", type=int, required=True)
    _solver_options(ring)

    sweep = sub.add_parser("sweep", help="admission rates of greedy packing over a grid")
    sweep.add_argument("--n", type=int, nargs="+", dest="ns", required=True)
    sweep.add_argument("--dim", type=int, nargs="+", dest="dims", required=True)
    sweep.add_argument("--eps", type=float, nargs="+", dest="epss", required=True)
    sweep.add_argument("--candidates", type=int, required=True)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--symmetric", action="store_true")
    sweep.add_argument("--threads", type=int)
    _solver_options(sweep)

    return parser
