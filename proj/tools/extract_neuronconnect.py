#!/usr/bin/env python3
"""Extract the chemical-synapse digraph from WormAtlas NeuronConnect.xls.

Writes one "pre post" line per directed connection of type S or Sp (the
presynaptic side of each synapse record). Feed the result to
`dqa convert --format named` to obtain a dense edge list.
"""
import sys

import pandas as pd


def main() -> int:
    if len(sys.argv) != 3:
        print("usage: extract_neuronconnect.py NeuronConnect.xls out.txt", file=sys.stderr)
        return 2
    frame = pd.read_excel(sys.argv[1])
    edges = sorted(
        {
            (str(a).strip(), str(b).strip())
            for a, b, kind in zip(frame["Neuron 1"], frame["Neuron 2"], frame["Type"])
            if kind in ("S", "Sp") and a != b
        }
    )
    with open(sys.argv[2], "w") as out:
        out.write("# C. elegans chemical synapse connectome (WormAtlas NeuronConnect.xls, Varshney et al. 2011)\n")
        out.write("# one directed edge per line: presynaptic postsynaptic; connection types S and Sp\n")
        for a, b in edges:
            out.write(f"{a} {b}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
