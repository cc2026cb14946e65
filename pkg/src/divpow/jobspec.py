"""YAML job documents for ``divpow generate``.

Schema (all keys except ``operator``/``params`` required)::

    variables: [u, v, w, x, y, z]          # ordered variable table
    basis:                                 # denominator basis f1..fm (m <= 3)
      - v*z - w*y
      - w*x - u*z
      - u*y - v*x
    basis_names: [D1, D2, D3]              # optional display names
    params: {k: 2, p: 3, e: 1}             # optional integers
    syzygies:                              # each must satisfy sum g_i f_i = 0
      - name: alpha
        coeffs: [u, v, w]
    operator: Du^k Dy^k Dz^k               # or a mapping {u: k, y: k, z: k}

Inside ``operator`` the letter ``k`` as an order stands for ``params.k``.
When ``params`` has ``p`` and ``e`` the q-th power relation is checked for
every syzygy as well.  Errors carry 1-based line and column numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import yaml

from .cech import Syzygy
from .diffop import DividedPowerOp
from .errors import DivpowError, ParseError
from .expr import parse_operator, parse_poly
from .ratfun import DenomBasis
from .ring import Polynomial, VarTable

DETERMINANTAL_JOB = """\
# Generic 2x3 matrix [[u, v, w], [x, y, z]] and its 2x2 minors.
variables: [u, v, w, x, y, z]
basis:
  - v*z - w*y
  - w*x - u*z
  - u*y - v*x
basis_names: [D1, D2, D3]
params:
  k: 1
  p: 2
  e: 1
syzygies:
  - name: alpha
    coeffs: [u, v, w]
  - name: beta
    coeffs: [x, y, z]
operator: Du^k Dy^k Dz^k
"""


class _Marked(str):
    line: int
    column: int
    quoted: bool


@dataclass
class JobSpec:
    vars: VarTable
    basis: DenomBasis
    syzygies: List[Tuple[str, Syzygy]]
    operator: DividedPowerOp
    params: Dict[str, int] = field(default_factory=dict)


def _plain(loader: yaml.SafeLoader, node: yaml.Node):
    if isinstance(node, yaml.MappingNode):
        out = {}
        for knode, vnode in node.value:
            out[_plain(loader, knode)] = (_plain(loader, vnode), vnode)
        return out
    if isinstance(node, yaml.SequenceNode):
        return [(_plain(loader, n), n) for n in node.value]
    value = loader.construct_object(node, deep=True)
    if isinstance(value, str):
        marked = _Marked(value)
        marked.line = node.start_mark.line + 1
        marked.column = node.start_mark.column + 1
        marked.quoted = node.style in ("'", '"')
        return marked
    return value


def _err(msg: str, node: Optional[yaml.Node], source: str) -> ParseError:
    if node is None:
        return ParseError(msg, source)
    return ParseError(msg, source, line=node.start_mark.line + 1, column=node.start_mark.column + 1)


def _relocate(exc: ParseError, text: str, node: yaml.Node, source: str) -> ParseError:
    line = node.start_mark.line + 1
    column = node.start_mark.column + 1
    if exc.pos is not None:
        column += exc.pos + (1 if isinstance(text, _Marked) and text.quoted else 0)
    msg = str(exc.args[0]).split(" at position")[0]
    return type(exc)(msg, source, line=line, column=column)


def _poly(text, node, vars: VarTable, source: str) -> Polynomial:
    if isinstance(text, int) and not isinstance(text, bool):
        return Polynomial.constant(vars, text)
    if not isinstance(text, str):
        raise _err("expected a polynomial expression", node, source)
    try:
        return parse_poly(text, vars)
    except ParseError as exc:
        raise _relocate(exc, text, node, source) from None


def load_job(text: str, source: str = "<job>") -> JobSpec:
    loader = yaml.SafeLoader(text)
    try:
        root = loader.get_single_node()
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise ParseError(f"YAML error: {exc.problem}", source,
                         line=mark.line + 1 if mark else None,
                         column=mark.column + 1 if mark else None) from None
    if root is None or not isinstance(root, yaml.MappingNode):
        raise _err("job document must be a mapping", root, source)
    doc = _plain(loader, root)
    loader.dispose()

    def need(key):
        if key not in doc:
            raise _err(f"missing required key {key!r}", root, source)
        return doc[key]

    names, node = need("variables")
    if not isinstance(names, list) or not names:
        raise _err("'variables' must be a nonempty list", node, source)
    for name, n in names:
        if not isinstance(name, str) or not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
            raise _err(f"bad variable name {name!r}", n, source)
    try:
        vars = VarTable(name for name, _ in names)
    except DivpowError as exc:
        raise _err(str(exc), node, source) from None

    params: Dict[str, int] = {}
    if "params" in doc:
        pmap, pnode = doc["params"]
        if not isinstance(pmap, dict):
            raise _err("'params' must be a mapping", pnode, source)
        for key, (val, vnode) in pmap.items():
            if key not in ("k", "p", "e") or not isinstance(val, int) or val < 0:
                raise _err(f"bad parameter {key}: {val!r}", vnode, source)
            params[key] = val

    blist, bnode = need("basis")
    if not isinstance(blist, list) or not blist:
        raise _err("'basis' must be a nonempty list", bnode, source)
    polys = [_poly(t, n, vars, source) for t, n in blist]
    bnames = None
    if "basis_names" in doc:
        raw, nnode = doc["basis_names"]
        if not isinstance(raw, list) or len(raw) != len(polys):
            raise _err("'basis_names' must match the basis length", nnode, source)
        bnames = [str(t) for t, _ in raw]
    try:
        basis = DenomBasis(polys, bnames)
    except DivpowError as exc:
        raise _err(str(exc), bnode, source) from None

    slist, snode = need("syzygies")
    if not isinstance(slist, list):
        raise _err("'syzygies' must be a list", snode, source)
    syzygies = []
    for idx, (entry, enode) in enumerate(slist):
        if not isinstance(entry, dict) or "coeffs" not in entry:
            raise _err("each syzygy needs 'coeffs'", enode, source)
        name = str(entry["name"][0]) if "name" in entry else f"syzygy{idx + 1}"
        coeffs, cnode = entry["coeffs"]
        if not isinstance(coeffs, list):
            raise _err("'coeffs' must be a list", cnode, source)
        gs = [_poly(t, n, vars, source) for t, n in coeffs]
        try:
            syzygies.append((name, Syzygy(basis, gs)))
        except DivpowError as exc:
            raise _err(f"syzygy {name!r}: {exc}", enode, source) from None

    operator = DividedPowerOp.identity(vars)
    if "operator" in doc:
        raw, onode = doc["operator"]
        operator = _operator(raw, onode, vars, params, source)
    return JobSpec(vars, basis, syzygies, operator, params)


def _operator(raw, node, vars: VarTable, params: Dict[str, int], source: str) -> DividedPowerOp:
    def order(val, vnode):
        if val == "k":
            if "k" not in params:
                raise _err("operator uses k but params.k is not set", vnode, source)
            return params["k"]
        if not isinstance(val, int) or val < 0:
            raise _err(f"bad operator order {val!r}", vnode, source)
        return val

    if isinstance(raw, dict):
        orders = {}
        for name, (val, vnode) in raw.items():
            if name not in vars.names:
                raise _err(f"undeclared variable {name!r}", vnode, source)
            orders[name] = order(val, vnode)
        return DividedPowerOp.from_orders(vars, orders)
    if isinstance(raw, str):
        text = raw
        if re.search(r"\^k\b", text):
            k = order("k", node)
            text = re.sub(r"\^k\b", f"^{k}", text)
        try:
            return parse_operator(text, vars)
        except ParseError as exc:
            raise _err(str(exc), node, source) from None
    raise _err("'operator' must be a string or a mapping", node, source)
