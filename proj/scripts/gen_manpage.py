#!/usr/bin/env python3
"""Render the man page for the implode command from schemas/*.schema.json."""
import argparse
import json
import pathlib

ORDER = ["rootsys", "arrangement", "hypertoric", "quiver", "contract", "mt", "nahm", "verify"]


def esc(text):
    return text.replace("\\", "\\e").replace("-", "\\-")


def fields(schema):
    props = schema.get("properties", {})
    req = set(schema.get("required", []))
    out = []
    for name, spec in props.items():
        mark = "" if name in req else " (optional)"
        desc = spec.get("description", "")
        out.append(f"{name}{mark}" + (f": {desc}" if desc else ""))
    return out


def render(schema_dir):
    docs = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    lines = [
        '.TH IMPLODE 1 "" "implode 1.0" "User Commands"',
        ".SH NAME",
        "implode \\- implosions, contractions and their moment maps",
        ".SH SYNOPSIS",
        ".B implode",
        ".I command action",
        "[\\fB\\-\\-input\\fR \\fIfile\\fR] [\\fB\\-\\-output\\fR \\fIfile\\fR] [\\fB\\-\\-tol\\fR \\fIx\\fR] [\\fB\\-\\-seed\\fR \\fIn\\fR]",
        ".SH DESCRIPTION",
        "Every action reads one JSON document and writes one JSON document.",
        "Complex numbers are written as [re, im] and matrices as arrays of rows.",
        "Index lists (flats, broad subsets, Weyl words, permutations) are 1\\-based.",
        ".SH OPTIONS",
    ]
    for opt, desc in docs[ORDER[0]]["common_options"].items():
        lines += [".TP", f"\\fB{esc(opt)}\\fR", esc(desc)]
    lines += [".TP", "\\fB\\-\\-family\\fR, \\fB\\-\\-rank\\fR",
              "root system in place of an input document (rootsys, arrangement, hypertoric)",
              ".TP", "\\fB\\-\\-chain\\fR \\fIfile\\fR", "alias of \\-\\-input for mt compose",
              ".TP", "\\fB\\-\\-csv\\fR \\fIfile\\fR", "trajectory output for contract ghflow",
              ".TP", "\\fB\\-\\-serial\\fR", "use the single-threaded reference path (verify, arrangement)"]
    lines.append(".SH COMMANDS")
    for cmd in ORDER:
        doc = docs[cmd]
        lines += [".SS " + cmd, esc(doc["description"])]
        for action, spec in doc["actions"].items():
            lines += [".TP", f"\\fB{cmd} {esc(action)}\\fR", esc(spec["summary"])]
            inp = fields(spec["input"])
            if inp:
                lines += [".br", "Input: " + esc("; ".join(inp)) + "."]
            if "tol" in spec:
                lines += [".br", "\\-\\-tol: " + esc(spec["tol"]) + "."]
    lines += [
        ".SH EXIT STATUS",
        ".TP", "0", "success",
        ".TP", "2", "precondition violated (document carries error.code)",
        ".TP", "3", "input does not match the schema",
        ".TP", "4", "numerical failure, or a failing verify suite",
        ".SH FILES",
        "schemas/*.schema.json describe each command; data/*.json hold sample inputs.",
    ]
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--schemas", type=pathlib.Path, required=True)
    ap.add_argument("--output", type=pathlib.Path, required=True)
    args = ap.parse_args()
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text(render(args.schemas))


if __name__ == "__main__":
    main()
