"""Bit-exact text formats: Cayley tables, Schreier data and data pairs.

ASCII, LF line endings; lines starting with `#` are comments and are
ignored on input.  emit(parse(file)) is the identity on canonical files and
parse(emit(value)) is the identity on values.
"""

from __future__ import annotations

from .core import LoopError, LoopTable
from .decomposition import DataPair
from .extensions import SchreierData


class ParseError(LoopError):
    pass


def _data_lines(text):
    for raw in text.split("\n"):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _read_ints(line, count=None, what="line"):
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError("non-integer token in %s: %r" % (what, line))
    if count is not None and len(vals) != count:
        raise ParseError("%s has %d entries, expected %d" % (what, len(vals), count))
    return vals


def _parse_table_block(lines, what="loop"):
    try:
        n = int(next(lines))
    except (StopIteration, ValueError):
        raise ParseError("expected an order line for %s" % what)
    rows = []
    for i in range(n):
        try:
            rows.append(_read_ints(next(lines), n, "%s row %d" % (what, i)))
        except StopIteration:
            raise ParseError("%s table truncated at row %d" % (what, i))
    return rows


def parse_loop(text, label=None):
    lines = _data_lines(text)
    rows = _parse_table_block(lines)
    if next(lines, None) is not None:
        raise ParseError("trailing data after the table")
    return LoopTable(rows, label=label)


def emit_loop(L):
    out = [str(L.order)]
    out += [" ".join(str(v) for v in row) for row in L.table]
    return "\n".join(out) + "\n"


def _emit_table_lines(L):
    return [str(L.order)] + [" ".join(str(v) for v in row) for row in L.table]


def parse_schreier_data(text, label=None):
    lines = _data_lines(text)
    sections = {}
    order = ["K:", "G:", "Theta:", "f:"]
    try:
        head = next(lines)
    except StopIteration:
        raise ParseError("empty Schreier data file")
    for name in order:
        if head != name:
            raise ParseError("expected section %r, found %r" % (name, head))
        if name in ("K:", "G:"):
            sections[name] = LoopTable(_parse_table_block(lines, name))
            head = next(lines, None)
        else:
            k = sections["K:"].order
            width = sections["G:"].order if name == "Theta:" else k
            block = []
            for i in range(k):
                try:
                    block.append(tuple(_read_ints(next(lines), width,
                                                  "%s row %d" % (name, i))))
                except StopIteration:
                    raise ParseError("section %r truncated" % name)
            sections[name] = tuple(block)
            head = next(lines, None)
    if head is not None:
        raise ParseError("trailing data after section f:")
    return SchreierData(sections["K:"], sections["G:"], sections["Theta:"],
                        sections["f:"], label=label)


def emit_schreier_data(data):
    out = ["K:"] + _emit_table_lines(data.K) + ["G:"] + _emit_table_lines(data.G)
    out.append("Theta:")
    out += [" ".join(str(v) for v in p) for p in data.theta]
    out.append("f:")
    out += [" ".join(str(v) for v in row) for row in data.f]
    return "\n".join(out) + "\n"


def parse_pair(text, K):
    """Pair file: section kappa: (|K| coset indices), section sigma: (one
    element per coset, coset order)."""
    lines = _data_lines(text)
    if next(lines, None) != "kappa:":
        raise ParseError("expected section 'kappa:'")
    kappa = tuple(_read_ints(next(lines, ""), K.order, "kappa"))
    if next(lines, None) != "sigma:":
        raise ParseError("expected section 'sigma:'")
    sigma = tuple(_read_ints(next(lines, ""), K.order, "sigma"))
    if next(lines, None) is not None:
        raise ParseError("trailing data after sigma:")
    return DataPair(K, kappa, tuple(sorted(sigma)))


def emit_pair(pair):
    return ("kappa:\n" + " ".join(str(v) for v in pair.kappa) + "\n"
            + "sigma:\n" + " ".join(str(v) for v in pair.sigma) + "\n")


def emit_decomposition(dec):
    return (emit_schreier_data(dec.data)
            + "iso:\n" + " ".join(str(v) for v in dec.iso) + "\n")


def parse_subset(spec):
    """Comma-separated element indices."""
    try:
        return tuple(sorted({int(tok) for tok in spec.split(",") if tok != ""}))
    except ValueError:
        raise ParseError("bad subset spec %r" % spec)


def parse_map(spec):
    """Comma-separated images."""
    try:
        return tuple(int(tok) for tok in spec.split(",") if tok != "")
    except ValueError:
        raise ParseError("bad map spec %r" % spec)
