"""Instance files (``s/ac/l`` facts) and the ``t(x) f(y) u(z)`` interpretation syntax.

Instance grammar::

    fact    ::= "s(" name ")." | "ac(" name "," formula ")." | "l(" name "," name ")."
    formula ::= name | "c(v)" | "c(f)" | "neg(" formula ")"
              | op "(" formula "," formula ")"       op ∈ and, or, imp, iff, xor

``%`` starts a comment running to the end of the line. Without ``l`` facts the
links are read off the formula atoms; with them, they are authoritative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    BINARY_OPS, BOTTOM, TOP, Adf, Atom, Const, Diagnostic, Formula, Neg, ThreeValued, Vocabulary,
    bits,
)
from .errors import ParseError

NAME_RE = re.compile(r"[A-Za-z0-9_]+")
_TOKEN_RE = re.compile(r"\s+|%[^\n]*|[A-Za-z0-9_]+|[(),.]|.", re.S)
_OP_NAMES = {cls: name for name, cls in BINARY_OPS.items()}


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    line, line_start = 1, 0
    for m in _TOKEN_RE.finditer(text):
        tok = m.group()
        if not tok.isspace() and not tok.startswith("%"):
            toks.append(Token(tok, line, m.start() - line_start + 1))
        nl = tok.count("\n")
        if nl:
            line += nl
            line_start = m.start() + tok.rindex("\n") + 1
    return toks


class _Syntax(Exception):
    def __init__(self, message: str, tok: Token | None):
        self.diag = Diagnostic("error", message, tok.line if tok else None, tok.column if tok else None)


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self._end_tok = self.toks[-1] if self.toks else Token("", 1, 1)

    def peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise _Syntax("unexpected end of input", self._end_tok)
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text:
            raise _Syntax(f"expected '{text}', found '{tok.text}'", tok)
        return tok

    def name(self) -> Token:
        tok = self.next()
        if not NAME_RE.fullmatch(tok.text):
            raise _Syntax(f"expected a statement name, found '{tok.text}'", tok)
        return tok

    def formula(self):
        head = self.name()
        nxt = self.peek()
        if nxt is None or nxt.text != "(":
            return ("atom", head)
        self.next()
        if head.text == "c":
            arg = self.name()
            if arg.text not in ("v", "f"):
                raise _Syntax(f"constant must be c(v) or c(f), found c({arg.text})", arg)
            self.expect(")")
            return ("const", arg.text == "v")
        if head.text == "neg":
            sub = self.formula()
            self.expect(")")
            return ("neg", sub)
        if head.text in BINARY_OPS:
            left = self.formula()
            self.expect(",")
            right = self.formula()
            self.expect(")")
            return (head.text, left, right)
        raise _Syntax(f"unknown connective '{head.text}'", head)


def _resolve(raw, vocab: Vocabulary, owner: str, diags: list[Diagnostic]) -> Formula:
    kind = raw[0]
    if kind == "atom":
        tok = raw[1]
        if tok.text not in vocab:
            diags.append(Diagnostic("error", f"atom {tok.text} undeclared", tok.line, tok.column,
                                    owner, "undeclared"))
            return BOTTOM
        return Atom(vocab.index[tok.text])
    if kind == "const":
        return TOP if raw[1] else BOTTOM
    if kind == "neg":
        return Neg(_resolve(raw[1], vocab, owner, diags))
    return BINARY_OPS[kind](_resolve(raw[1], vocab, owner, diags),
                            _resolve(raw[2], vocab, owner, diags))


def parse_adf(text: str) -> Adf:
    """Parse an instance; raises :class:`ParseError` listing every problem found."""
    p = _Parser(text)
    statements: list[Token] = []
    conds: list[tuple[Token, object]] = []
    links: list[tuple[Token, Token]] = []
    try:
        while p.peek() is not None:
            head = p.name()
            p.expect("(")
            if head.text == "s":
                statements.append(p.name())
            elif head.text == "ac":
                owner = p.name()
                p.expect(",")
                conds.append((owner, p.formula()))
            elif head.text == "l":
                a = p.name()
                p.expect(",")
                links.append((a, p.name()))
            else:
                raise _Syntax(f"unknown fact '{head.text}'", head)
            p.expect(")")
            p.expect(".")
    except _Syntax as e:
        raise ParseError([e.diag]) from None

    diags: list[Diagnostic] = []
    names: list[str] = []
    for tok in statements:
        if tok.text in names:
            diags.append(Diagnostic("error", f"duplicate statement {tok.text}", tok.line, tok.column,
                                    tok.text, "duplicate"))
        else:
            names.append(tok.text)
    vocab = Vocabulary(tuple(names))
    formulas: dict[int, Formula] = {}
    owners: dict[int, Token] = {}
    for owner, raw in conds:
        if owner.text not in vocab:
            diags.append(Diagnostic("error", f"condition for undeclared statement {owner.text}",
                                    owner.line, owner.column, owner.text, "undeclared"))
            continue
        i = vocab.index[owner.text]
        if i in formulas:
            diags.append(Diagnostic("error", f"duplicate condition for {owner.text}",
                                    owner.line, owner.column, owner.text, "duplicate"))
            continue
        formulas[i] = _resolve(raw, vocab, owner.text, diags)
        owners[i] = owner
    for i, name in enumerate(names):
        if i not in formulas:
            tok = next(t for t in statements if t.text == name)
            diags.append(Diagnostic("error", f"missing condition for {name}", tok.line, tok.column,
                                    name, "missing"))

    link_set: set[tuple[int, int]] = set()
    for a, b in links:
        bad = [t for t in (a, b) if t.text not in vocab]
        for t in bad:
            diags.append(Diagnostic("error", f"link mentions undeclared statement {t.text}",
                                    t.line, t.column, t.text, "undeclared"))
        if not bad:
            link_set.add((vocab.index[a.text], vocab.index[b.text]))
    if not links:
        link_set = {(a, i) for i, f in formulas.items() for a in bits(f.atoms())}
    else:
        for i, owner in owners.items():
            pmask = 0
            for a, b in link_set:
                if b == i:
                    pmask |= 1 << a
            for a in bits(formulas[i].atoms() & ~pmask):
                diags.append(Diagnostic("error", f"atom {names[a]} not a parent of {owner.text}",
                                        owner.line, owner.column, owner.text, "not-parent"))
    if diags:
        raise ParseError(diags)
    return Adf(vocab, tuple(formulas[i] for i in range(len(names))), frozenset(link_set))


def format_formula(f: Formula, vocab: Vocabulary) -> str:
    if isinstance(f, Const):
        return "c(v)" if f.val else "c(f)"
    if isinstance(f, Atom):
        return vocab.names[f.index]
    if isinstance(f, Neg):
        return f"neg({format_formula(f.arg, vocab)})"
    return f"{_OP_NAMES[type(f)]}({format_formula(f.left, vocab)},{format_formula(f.right, vocab)})"


def format_adf(adf: Adf) -> str:
    """Instance text; ``l`` facts are emitted only when links differ from the formula atoms."""
    names = adf.vocab.names
    lines = [f"s({n})." for n in names]
    lines += [f"ac({n},{format_formula(f, adf.vocab)})." for n, f in zip(names, adf.conditions)]
    induced = {(a, i) for i, f in enumerate(adf.conditions) for a in bits(f.atoms())}
    if set(adf.links) != induced:
        lines += [f"l({names[a]},{names[b]})." for a, b in sorted(adf.links, key=lambda e: (e[1], e[0]))]
    return "\n".join(lines) + "\n"


_INTERP_RE = re.compile(r"\s*(?:([tfu])\(\s*([A-Za-z0-9_]+)\s*\))")


def parse_interp(text: str, vocab: Vocabulary) -> ThreeValued:
    """Parse ``t(a) f(b) u(c)``; every statement must be mentioned exactly once."""
    diags: list[Diagnostic] = []
    values: dict[str, str] = {}
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _INTERP_RE.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError([Diagnostic("error", f"malformed interpretation near {text[col - 1:col + 9]!r}",
                                         1, col)])
        val, name = m.group(1), m.group(2)
        col = m.start(1) + 1
        if name not in vocab:
            diags.append(Diagnostic("error", f"unknown statement {name}", 1, col, name, "undeclared"))
        elif name in values:
            diags.append(Diagnostic("error", f"duplicate statement {name}", 1, col, name, "duplicate"))
        else:
            values[name] = val
        pos = m.end()
    for name in vocab.names:
        if name not in values and not any(d.statement == name for d in diags):
            diags.append(Diagnostic("error", f"missing statement {name}", statement=name, kind="missing"))
    if diags:
        raise ParseError(diags)
    return ThreeValued.from_values(vocab, values)


def print_interp(v) -> str:
    return str(v.as_three())
