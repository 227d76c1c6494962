"""Print the group-growth ledger and per-step graph-projection loss.

    python scripts/reproduce_illustration.py            # five participants
    python scripts/reproduce_illustration.py -n 7
"""

import argparse

from sesnet.complex import f_vector
from sesnet.evolution import participant_ids, run_growth
from sesnet.projection import graphs_identical, loss_report, skeleton_collision, to_underlying_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-n", type=int, default=5, help="number of participants")
    args = parser.parse_args()

    run = run_growth(participant_ids(args.n), args.n - 1)
    first = run.network.at(1)
    print(f"{'step':>4} {'input':>6} {'dim':>4} {'order':>7} {'output':>7} {'members':>8} {'lost':>6} {'same graph as step 1':>21}")
    for step, row in zip(run.steps, run.ledger()):
        cx = step.cumulative
        loss = loss_report(cx)
        same = graphs_identical(to_underlying_graph(first), to_underlying_graph(cx))
        print(
            f"{row.step:>4} {row.input_count:>6} {row.simplex_dimension:>4} {row.order_class:>7} "
            f"{row.output_count:>7} {len(cx):>8} {loss.simplices_lost:>6} {str(same):>21}"
        )
    final = run.network.final()
    c = skeleton_collision(first, final)
    print(f"final f-vector: {f_vector(final)}")
    print(f"step 1 vs step {run.steps[-1].step}: collision={c.collides}, witness={final.label(c.witness)}")


if __name__ == "__main__":
    main()
