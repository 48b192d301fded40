"""Parsers for construction, subring, and action expressions.

Instance files and the built-in catalog describe rings with a small call
vocabulary: zmod(n), gf(p,k[,modulus]), prod(A,B), quotient(A,[gens]),
idealization(A, self|quotient([gens])), funcfield(p, center, span).
Subrings are {"gens": [labels]}, "diag", or "base"; actions are generator
lists like "frobenius", "swap", "componentwise(a,b)", "compose(a,b)",
"module_negation", "idealization(a)", "identity", and for function fields
"scale(a)" and "translate(b)".
"""

from __future__ import annotations

from . import action, core, funcfield, ideals, polys
from .errors import ConstructionError


def split_top(s, sep=","):
    """Split on a separator at bracket depth zero."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    parts.append(s[start:])
    return [p for p in parts if p != ""]


def parse_call(s):
    """'name(a,b)' -> ('name', ['a','b']); a bare name has no arguments."""
    s = s.strip()
    if "(" not in s:
        return s, []
    head, _, rest = s.partition("(")
    if not rest.endswith(")"):
        raise ConstructionError(f"unbalanced call expression {s!r}")
    return head.strip(), [a.strip() for a in split_top(rest[:-1])]


def _int(text, what):
    try:
        return int(text)
    except ValueError:
        raise ConstructionError(f"{what} must be an integer, got {text!r}") from None


def _gen_list(text, what):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ConstructionError(f"{what} must be a bracketed list, got {text!r}")
    return [g.strip() for g in split_top(text[1:-1])]


def is_funcfield_expr(expr):
    return parse_call(expr)[0] == "funcfield"


def build_ring(expr):
    """Evaluate a finite construction expression to a FiniteRing."""
    name, args = parse_call(expr)
    if name == "zmod":
        if len(args) != 1:
            raise ConstructionError("zmod takes one argument")
        return core.make_zmod(_int(args[0], "zmod order"))
    if name == "gf":
        if len(args) not in (2, 3):
            raise ConstructionError("gf takes gf(p,k) or gf(p,k,modulus)")
        p, k = _int(args[0], "gf p"), _int(args[1], "gf k")
        modulus = polys.parse_poly(args[2], p) if len(args) == 3 else None
        return core.make_gf(p, k, modulus)
    if name == "prod":
        if len(args) != 2:
            raise ConstructionError("prod takes two constructions")
        return core.product(build_ring(args[0]), build_ring(args[1]))
    if name == "quotient":
        if len(args) != 2:
            raise ConstructionError("quotient takes a construction and [gens]")
        A = build_ring(args[0])
        gens = [A.elem(g) for g in _gen_list(args[1], "quotient gens")]
        I = ideals.ideal_generated(A, gens)
        return core.quotient_ring(A, I.members)[0]
    if name == "idealization":
        if len(args) != 2:
            raise ConstructionError("idealization takes a construction and a module spec")
        A = build_ring(args[0])
        return core.idealization(A, build_module(A, args[1]))
    if name == "funcfield":
        raise ConstructionError("funcfield constructions are not finite rings")
    raise ConstructionError(f"unknown construction {name!r}")


def build_module(A, spec):
    name, args = parse_call(spec)
    if name == "self":
        return core.module_over_self(A)
    if name == "quotient":
        if len(args) != 1:
            raise ConstructionError("module quotient takes [gens]")
        gens = [A.elem(g) for g in _gen_list(args[0], "module gens")]
        I = ideals.ideal_generated(A, gens)
        Q, proj = core.quotient_ring(A, I.members)
        return core.module_via_quotient_scalars(A, Q, proj)
    raise ConstructionError(f"unknown module spec {name!r}")


def build_funcfield(expr):
    """Evaluate funcfield(p, center, span) to a DVRWitness plus probe span."""
    name, args = parse_call(expr)
    if name != "funcfield":
        raise ConstructionError(f"expected a funcfield construction, got {name!r}")
    if len(args) not in (2, 3):
        raise ConstructionError("funcfield takes funcfield(p, center[, span])")
    p = _int(args[0], "funcfield p")
    V = funcfield.DVRWitness(p, args[1])
    span = _int(args[2], "funcfield span") if len(args) == 3 else funcfield.DEFAULT_SPAN
    if span < 3:
        raise ConstructionError("probe span below 3 cannot certify anything")
    return V, span


def build_subring(T, spec):
    """Evaluate a subring spec against a constructed ring."""
    if spec is None:
        return core.as_handle(T)
    if isinstance(spec, dict):
        if set(spec) != {"gens"}:
            raise ConstructionError(f'subring dict must be {{"gens": [...]}}, got {spec!r}')
        gens = [T.elem(g) for g in spec["gens"]]
        return core.subring_closure(T, gens)
    if spec == "diag":
        if T.meta.get("kind") != "product":
            raise ConstructionError("diag needs a product construction")
        A, B = T.meta["factors"]
        if A.order != B.order or A.labels != B.labels:
            raise ConstructionError("diag needs equal product factors")
        return core.SubringHandle(
            T, [core.prod_encode(T, i, i) for i in range(A.order)])
    if spec == "base":
        if T.meta.get("kind") != "idealization":
            raise ConstructionError("base needs an idealization construction")
        R = T.meta["base"]
        return core.SubringHandle(
            T, [core.ideal_encode(T, i, 0) for i in range(R.order)])
    raise ConstructionError(f"unknown subring spec {spec!r}")


def build_automorphism(T, spec):
    name, args = parse_call(spec)
    if name == "identity":
        return action.identity_automorphism(T)
    if name == "frobenius":
        return action.frobenius(T)
    if name == "swap":
        return action.swap(T)
    if name == "module_negation":
        return action.module_negation(T)
    if name == "compose":
        if len(args) != 2:
            raise ConstructionError("compose takes two action specs")
        return build_automorphism(T, args[0]).compose(build_automorphism(T, args[1]))
    if name == "componentwise":
        if len(args) != 2:
            raise ConstructionError("componentwise takes two action specs")
        if T.meta.get("kind") != "product":
            raise ConstructionError("componentwise needs a product construction")
        A, B = T.meta["factors"]
        return action.componentwise(T, build_automorphism(A, args[0]),
                                    build_automorphism(B, args[1]))
    if name == "idealization":
        if len(args) != 1:
            raise ConstructionError("idealization action takes one base action spec")
        if T.meta.get("kind") != "idealization":
            raise ConstructionError("idealization action needs an idealization ring")
        R = T.meta["base"]
        M = T.meta["module"]
        if len(M.labels) != R.order:
            raise ConstructionError(
                "idealization action needs the module to mirror the base ring")
        base = build_automorphism(R, args[0])
        return action.idealization_map(T, base, base.perm,
                                       name=f"idealization({base.name})")
    raise ConstructionError(f"unknown action spec {name!r}")


def build_action(T, specs):
    gens = [build_automorphism(T, s) for s in specs]
    return action.close_group(gens or [action.identity_automorphism(T)])


def build_subst_action(p, specs):
    gens = []
    for spec in specs:
        name, args = parse_call(spec)
        if name == "identity":
            continue
        if name == "scale":
            if len(args) != 1:
                raise ConstructionError("scale takes one argument")
            gens.append(funcfield.scale_gen(p, _int(args[0], "scale factor")))
        elif name == "translate":
            if len(args) != 1:
                raise ConstructionError("translate takes one argument")
            gens.append(funcfield.translate_gen(p, _int(args[0], "translate offset")))
        else:
            raise ConstructionError(f"unknown substitution spec {name!r}")
    return funcfield.SubstAction(p, gens)
