"""Constructive light-leaf recipes.

A spherical light-leaf for a subexpression e of a word x_ is built one letter
at a time.  Before step k we hold a reduced word of the stroll element
z_{k-1}; the step's decoration decides what happens to the incoming strand
s_k:

    U1  append s_k (the word stays reduced),
    U0  kill the strand with a dot,
    X0  kill the strand with a dot (it would cross the wall),
    D0  move a matching letter to the right end and merge (trivalent vertex),
    D1  move a matching letter to the right end and cap it off,
    X1  append s_k, pull the wall-crossing generator t = z s_k z^{-1} to the
        left end by a rex move, and plug it into the wall.

Each step records a pre_rex (braid moves before the elementary operation), the
elementary operation, and a post_rex normalizing to the chosen reduced word of
z_k (ShortLex-minimal, unless a target expression pins the last one).  Degrees
are +1 for U0/X0, -1 for D0/X1, 0 for U1/D1, summing to the spherical defect.

Non-spherical light-leaves keep the same shape but their intermediate words
are concatenations (u_k, z_k) of the coset decomposition of the classical
Bruhat stroll; wall plug-ins become transfers into the u-block, with the
sweep-based rex-move choices of the X0 case made explicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coxeter import IDENTITY, CoxeterSystem, RexMove, Word, _alternating
from .errors import (
    EndpointMismatch,
    PreconditionViolated,
    TargetMismatch,
    UnknownFormat,
    WordMismatch,
)
from .strolls import Bits, Decoration, decorate

STEP_DEGREE = {"U0": 1, "X0": 1, "D0": -1, "X1": -1, "U1": 0, "D1": 0}

CONVENTIONS = {"rex": "shortlex-bfs"}


def _identity_move(word: Word) -> RexMove:
    return RexMove(word, word, ())


def _shift_move(move: RexMove, offset: int, full_source: Word) -> RexMove:
    """Embed a rex move on a block into the surrounding word."""
    n = len(move.source)
    if full_source[offset : offset + n] != move.source:
        raise WordMismatch("block does not match the surrounding word")
    apps = tuple((p + offset, s, t, m) for p, s, t, m in move.applications)
    target = full_source[:offset] + move.target + full_source[offset + n :]
    return RexMove(full_source, target, apps)


def _compose_moves(*moves: RexMove) -> RexMove:
    """Concatenate rex moves; each must start where the previous ended."""
    moves = [m for m in moves if m is not None]
    if not moves:
        raise ValueError("nothing to compose")
    apps: list = []
    for prev, cur in zip(moves, moves[1:]):
        if prev.target != cur.source:
            raise WordMismatch(
                f"rex moves do not chain: {prev.target} vs {cur.source}"
            )
    for m in moves:
        apps.extend(m.applications)
    return RexMove(moves[0].source, moves[-1].target, tuple(apps))


def _reverse_move(move: RexMove) -> RexMove:
    """The inverse rex move (each braid application undone, in reverse order)."""
    apps = tuple((p, t, s, m) for p, s, t, m in reversed(move.applications))
    return RexMove(move.target, move.source, apps)


@dataclass(frozen=True)
class LLStep:
    k: int  # 1-based letter index
    label: str
    pre_rex: RexMove
    elementary: str  # none | dot-kill | trivalent-merge | cap | wall-plug:<gen>
    post_rex: RexMove
    intermediate: Word  # the expression after the step

    @property
    def degree(self) -> int:
        return STEP_DEGREE[self.label]


@dataclass(frozen=True)
class LLRecipe:
    word: Word
    bits: Bits
    steps: tuple[LLStep, ...]
    target: Word  # expression after the last step
    flipped: bool = False  # True for the upper half of a double leaf

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.steps)


@dataclass(frozen=True)
class DoubleLeafRecipe:
    lower: LLRecipe
    upper: LLRecipe  # flipped
    through: Word  # the shared reduced word of the endpoint

    @property
    def degree(self) -> int:
        return self.lower.degree + self.upper.degree


# -- spherical light-leaves ----------------------------------------------------


def build_sll(system: CoxeterSystem, J: frozenset[int],
              word: Sequence[int], bits: Sequence[int],
              target_rex: Sequence[int] | None = None) -> LLRecipe:
    dec = decorate(system, J, word, bits)
    word = dec.word
    bits = dec.bits
    n = len(word)
    if target_rex is not None:
        target_rex = tuple(target_rex)
        elem, reduced = system.normalize(target_rex)
        if not reduced or elem != dec.endpoint:
            raise TargetMismatch(
                f"{target_rex} is not a reduced word of the endpoint "
                f"{dec.endpoint}"
            )
    steps = []
    cur: Word = IDENTITY
    for k in range(1, n + 1):
        s = word[k - 1]
        label = dec.labels[k - 1]
        z_next = dec.stroll[k]
        chosen = target_rex if (k == n and target_rex is not None) else z_next
        if label == "U1":
            grown = cur + (s,)
            pre = _identity_move(grown)
            elementary = "none"
            mid = grown
        elif label in ("U0", "X0"):
            pre = _identity_move(cur)
            elementary = "dot-kill"
            mid = cur
        elif label == "D0":
            pre = system.find_rex(cur, lambda w: bool(w) and w[-1] == s)
            elementary = "trivalent-merge"
            mid = pre.target
        elif label == "D1":
            pre = system.find_rex(cur, lambda w: bool(w) and w[-1] == s)
            elementary = "cap"
            mid = pre.target[:-1]
        else:  # X1
            t = system.wall_cross(system.element(cur), s, J)
            grown = cur + (s,)
            pre = system.find_rex(grown, lambda w: w[0] == t)
            elementary = f"wall-plug:{system.matrix.generators[t]}"
            mid = pre.target[1:]
        post = system.rex_path(mid, chosen)
        steps.append(LLStep(k, label, pre, elementary, post, chosen))
        cur = chosen
    return LLRecipe(word, bits, tuple(steps), cur)


def build_sdl(system: CoxeterSystem, J: frozenset[int],
              x_word: Sequence[int], e_bits: Sequence[int],
              y_word: Sequence[int], f_bits: Sequence[int]) -> DoubleLeafRecipe:
    """Double leaf: the light-leaf for (x_, e) followed by the flip of the
    light-leaf for (y_, f), glued through the ShortLex-minimal reduced word of
    the common endpoint."""
    dec_e = decorate(system, J, x_word, e_bits)
    dec_f = decorate(system, J, y_word, f_bits)
    if dec_e.endpoint != dec_f.endpoint:
        raise EndpointMismatch(
            f"endpoints differ: {dec_e.endpoint} vs {dec_f.endpoint}"
        )
    through = dec_e.endpoint  # canonical word of the shared mcr
    lower = build_sll(system, J, x_word, e_bits, target_rex=through)
    upper_raw = build_sll(system, J, y_word, f_bits, target_rex=through)
    upper = LLRecipe(
        upper_raw.word, upper_raw.bits, upper_raw.steps, upper_raw.target,
        flipped=True,
    )
    return DoubleLeafRecipe(lower, upper, through)


# -- sweeps ---------------------------------------------------------------------


def find_sweep(system: CoxeterSystem, s: int, z: Word, t: int) -> tuple[Word, RexMove]:
    """Given sz = zt > z, return a reduced word z~ of z and a sweep (braid
    applications with non-decreasing start positions) from (s, z~) to (z~, t).

    Constructive induction: a rex move (s, z_) -> (z_, t) must at some point
    change the last letter to t via a braid application flush with the right
    end; the prefix before that window satisfies the same hypotheses with a
    shorter element, so recurse and append the final application.
    """
    sz = system.left_mult(s, z)
    if sz != system.right_mult(z, t) or len(sz) <= len(z):
        raise PreconditionViolated(f"need s*z = z*t > z; got s={s}, z={z}, t={t}")
    if not z:
        # sz = zt forces s = t here (checked above via sz == zt).
        return IDENTITY, RexMove((s,), (t,), ())
    path = system.rex_path((s,) + z, z + (t,))
    word = path.source
    for pos, a, b, m in path.applications:
        nxt = word[:pos] + _alternating(b, a, m) + word[pos + m :]
        if pos + m == len(word) and nxt[-1] == t and word[-1] != t:
            prefix = system.element(word[:pos])
            window = word[pos:]  # alt(a, b, m); its product closes the gap
            z_prefix, sweep_prefix = find_sweep(system, s, prefix, a)
            z_tilde = z_prefix + window[1:]
            final_app = (len(z_prefix), a, b, m)
            apps = sweep_prefix.applications + (final_app,)
            move = RexMove((s,) + z_tilde, z_tilde + (t,), apps)
            return z_tilde, move
        word = nxt
    raise PreconditionViolated("no rex move changes the last letter, input invalid")


# -- non-spherical light-leaves -----------------------------------------------------


@dataclass(frozen=True)
class NSStep(LLStep):
    classical_label: str = ""
    u_part: Word = ()
    z_part: Word = ()

    @property
    def degree(self) -> int:
        # Without a wall, the degree is the classical one: wall plug-ins
        # become plain rex moves into the u-block (degree 0).
        return STEP_DEGREE[self.classical_label]


def build_nsll(system: CoxeterSystem, J: frozenset[int],
               word: Sequence[int], bits: Sequence[int]) -> LLRecipe:
    """Non-spherical light-leaf whose intermediate expressions are
    concatenations (u_k, z_k) of the coset decomposition w_k = u_k z_k of the
    classical Bruhat stroll.  Wall plug-ins of the spherical construction
    become transfers of the wall-crossing generator into the u-block."""
    dec = decorate(system, J, word, bits)
    word = dec.word
    bits = dec.bits
    steps = []
    u: Word = IDENTITY  # canonical word of u_k
    zw: Word = IDENTITY  # canonical word of z_k
    for k in range(1, len(word) + 1):
        s = word[k - 1]
        d_spherical = dec.labels[k - 1]
        b = bits[k - 1]
        w_elem = system.mult(u, zw)
        ws = system.right_mult(w_elem, s)
        d_letter = "U" if len(ws) > len(w_elem) else "D"
        d_classical = f"{d_letter}{b}"
        full = u + zw
        off = len(u)
        if d_spherical[0] != "X":
            # Case 1: the classical and spherical labels agree; everything
            # happens inside the z-block.
            if d_spherical == "U1":
                zw_next = system.right_mult(system.element(zw), s)
                grown = full + (s,)
                pre = _identity_move(grown)
                elementary = "none"
                mid = grown
                z_after = zw_next
            elif d_spherical == "U0":
                pre = _identity_move(full)
                elementary = "dot-kill"
                mid = full
                z_after = zw
            elif d_spherical == "D0":
                beta = system.find_rex(zw, lambda w: bool(w) and w[-1] == s)
                pre = _shift_move(beta, off, full)
                elementary = "trivalent-merge"
                mid = pre.target
                z_after = zw
            else:  # D1
                beta = system.find_rex(zw, lambda w: bool(w) and w[-1] == s)
                pre = _shift_move(beta, off, full)
                elementary = "cap"
                mid = pre.target[:-1]
                z_after = system.element(pre.target[off:-1])
            u_after = u
        else:
            t_gen = system.wall_cross(system.element(zw), s, J)
            t_name = system.matrix.generators[t_gen]
            if d_classical == "U0":
                # d' = X0 with the strand going up: identical to a plain U0.
                pre = _identity_move(full)
                elementary = "dot-kill"
                mid = full
                u_after, z_after = u, zw
            elif d_classical == "U1":
                # d' = X1: pull t across the z-block and let it join u.
                grown = full + (s,)
                delta = system.rex_path(zw + (s,), (t_gen,) + zw)
                pre = _shift_move(delta, off, grown)
                elementary = f"wall-transfer:{t_name}"
                mid = pre.target
                u_after = system.right_mult(system.element(u), t_gen)
                z_after = zw
            elif d_classical == "D1":
                # d' = X1: t is a right descent of u; expose it, slide it
                # across the z-block to the right, and cap the incoming strand.
                gamma = system.find_rex(u, lambda w: bool(w) and w[-1] == t_gen)
                pre1 = _shift_move(gamma, 0, full)
                delta = system.rex_path((t_gen,) + zw, zw + (s,))
                pre2 = _shift_move(delta, len(u) - 1, pre1.target)
                pre = _compose_moves(pre1, pre2)
                elementary = "cap"
                mid = pre.target[:-1]
                u_after = system.element(gamma.target[:-1])
                z_after = zw
            else:  # d_classical == "D0", d' = X0
                # Sweep-based construction: expose t at the right of u, sweep
                # it across a suitable rex of z, merge with the incoming
                # strand, then sweep back.
                gamma = system.find_rex(u, lambda w: bool(w) and w[-1] == t_gen)
                pre1 = _shift_move(gamma, 0, full)
                z_tilde, sweep = find_sweep(system, t_gen, system.element(zw), s)
                delta1 = system.rex_path(zw, z_tilde)
                pre2 = _shift_move(delta1, len(u), pre1.target)
                pre3 = _shift_move(sweep, len(u) - 1, pre2.target)
                pre = _compose_moves(pre1, pre2, pre3)
                elementary = "trivalent-merge"
                mid = pre.target
                u_after, z_after = u, zw
                # The post moves reverse the sweep and renormalize each block.
                back = _shift_move(_reverse_move(sweep), len(u) - 1, mid)
                gamma_back = _shift_move(_reverse_move(gamma), 0, back.target)
                post_tail = _compose_moves(back, gamma_back)
                chosen = u_after + z_after
                norm = _shift_move(
                    system.rex_path(post_tail.target[len(u_after):], z_after),
                    len(u_after), post_tail.target,
                )
                post = _compose_moves(post_tail, norm)
                steps.append(NSStep(k, d_spherical, pre, elementary, post, chosen,
                                    classical_label=d_classical,
                                    u_part=u_after, z_part=z_after))
                u, zw = u_after, z_after
                continue
        # Normalize both blocks to their canonical words.
        chosen = u_after + z_after
        mid_u, mid_z = mid[: len(mid) - len(z_after)], mid[len(mid) - len(z_after):]
        post_u = _shift_move(system.rex_path(mid_u, u_after), 0, mid)
        post_z = _shift_move(
            system.rex_path(post_u.target[len(u_after):], z_after),
            len(u_after), post_u.target,
        )
        post = _compose_moves(post_u, post_z)
        steps.append(NSStep(k, d_spherical, pre, elementary, post, chosen,
                            classical_label=d_classical,
                            u_part=u_after, z_part=z_after))
        u, zw = u_after, z_after
    return LLRecipe(word, bits, tuple(steps), u + zw)


# -- rendering --------------------------------------------------------------------


def recipe_to_json(system: CoxeterSystem, recipe: LLRecipe) -> dict:
    out = {
        "word": system.format_word(recipe.word),
        "bits": list(recipe.bits),
        "steps": [
            {
                "k": st.k,
                "label": st.label,
                "pre_rex": st.pre_rex.to_json(),
                "elementary": st.elementary,
                "post_rex": st.post_rex.to_json(),
                "intermediate": system.format_word(st.intermediate),
            }
            for st in recipe.steps
        ],
        "degree": recipe.degree,
        "conventions": dict(CONVENTIONS),
    }
    if recipe.flipped:
        out["flipped"] = True
    return out


def parse_recipe_json(system: CoxeterSystem, J: frozenset[int], data: dict) -> LLRecipe:
    """Rebuild a recipe from its JSON form (the steps are re-derived; the
    serialized steps are checked to match, so parsing doubles as validation)."""
    word = system.parse_word(data["word"])
    bits = tuple(int(b) for b in data["bits"])
    target = None
    if data["steps"]:
        target = system.parse_word(data["steps"][-1]["intermediate"])
    recipe = build_sll(system, J, word, bits, target_rex=target)
    if bool(data.get("flipped", False)):
        recipe = LLRecipe(recipe.word, recipe.bits, recipe.steps, recipe.target,
                          flipped=True)
    if recipe_to_json(system, recipe) != data:
        raise WordMismatch("serialized recipe does not match its reconstruction")
    return recipe


def double_leaf_to_json(system: CoxeterSystem, dl: DoubleLeafRecipe) -> dict:
    return {
        "lower": recipe_to_json(system, dl.lower),
        "upper": recipe_to_json(system, dl.upper),
        "through": system.format_word(dl.through),
        "degree": dl.degree,
    }


def _fmt_word(system: CoxeterSystem, w: Word) -> str:
    return system.format_word(w) or "e"


def _render_move(system: CoxeterSystem, move: RexMove) -> str:
    if not move.applications:
        return "-"
    parts = []
    for p, s, t, m in move.applications:
        gs, gt = system.matrix.generators[s], system.matrix.generators[t]
        parts.append(f"braid@{p}[{gs}{gt}:{m}]")
    return " ".join(parts)


def render_text(system: CoxeterSystem, recipe: LLRecipe) -> str:
    lines = []
    head = f"word={_fmt_word(system, recipe.word)} bits={''.join(map(str, recipe.bits))}"
    if recipe.flipped:
        head += " (flipped)"
    lines.append(head)
    for st in recipe.steps:
        extra = f" [{st.classical_label}]" if isinstance(st, NSStep) else ""
        lines.append(
            f"  step {st.k}: {st.label}{extra} pre={_render_move(system, st.pre_rex)} "
            f"op={st.elementary} post={_render_move(system, st.post_rex)} "
            f"-> {_fmt_word(system, st.intermediate)}"
        )
    lines.append(f"target={_fmt_word(system, recipe.target)} degree={recipe.degree}")
    return "\n".join(lines)


def render(system: CoxeterSystem, recipe, fmt: str = "text") -> str:
    import json as _json

    if fmt == "text":
        if isinstance(recipe, DoubleLeafRecipe):
            return "\n".join([
                "lower:",
                render_text(system, recipe.lower),
                "upper:",
                render_text(system, recipe.upper),
                f"through={_fmt_word(system, recipe.through)} degree={recipe.degree}",
            ])
        return render_text(system, recipe)
    if fmt == "json":
        if isinstance(recipe, DoubleLeafRecipe):
            return _json.dumps(double_leaf_to_json(system, recipe), indent=2)
        return _json.dumps(recipe_to_json(system, recipe), indent=2)
    raise UnknownFormat(f"unknown recipe format {fmt!r}")
