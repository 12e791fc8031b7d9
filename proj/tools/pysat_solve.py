#!/usr/bin/env python3
"""Competition-format wrapper around a PySAT solver: pysat_solve.py FILE.cnf"""
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main():
    if len(sys.argv) not in (2, 3):
        sys.exit("usage: pysat_solve.py CNF [solver-name]")
    name = sys.argv[2] if len(sys.argv) == 3 else "cadical153"
    cnf = CNF(from_file=sys.argv[1])
    with Solver(name=name, bootstrap_with=cnf.clauses) as s:
        if s.solve():
            print("s SATISFIABLE")
            model = s.get_model()
            for i in range(0, len(model), 20):
                print("v " + " ".join(map(str, model[i:i + 20])))
            print("v 0")
        else:
            print("s UNSATISFIABLE")
    sys.stdout.flush()


if __name__ == "__main__":
    main()
