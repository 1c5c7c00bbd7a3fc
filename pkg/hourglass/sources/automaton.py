# -*- coding: utf8 -*-
# SPDX-License-Identifier: GPL-3.0-or-later
"""
Read and write hourglass automata in the ``.hga`` format.

Example::

    # two hourglasses
    clocks: x=7, y=11
    actions: boil, flip7, done
    locations: start, cooking, ready
    initial: start
    final: ready
    invariant cooking: x <= cx
    trans start -> cooking on boil
    trans cooking -> cooking on flip7 when x == cx flip {x}
    trans cooking -> ready on done when y == cx & x >= 0

Lines are ``keyword: list`` sections, ``invariant <loc>: <guard>`` and
``trans <src> -> <dst> on <label> [when <guard>] [flip {..}] [toggle {..}]``.
Guards are ``true`` or ``&``-joined atoms ``clock op constant``, with
``op`` one of ``< <= == >= >`` and ``constant`` either ``0`` or ``cx``;
``mode: extended`` also allows integer constants up to the clock bound.
``#`` starts a comment.

:copyright:
    2025 The hourglass developers
:license:
    GNU General Public License v3.0 or later
    (https://www.gnu.org/licenses/gpl-3.0-standalone.html)
"""
from ..model import (
    CX, EXTENDED_MODE, HOURGLASS_MODE, Guard, GuardAtom, HourglassAutomaton,
    ModelError, Transition, check_guard, make_clocks)
from .tokens import (
    ParseError, TokenStream, TokenType, ValidationError, source_lines)

SECTIONS = ('mode', 'clocks', 'actions', 'locations', 'initial', 'final')
RESERVED = frozenset({CX, 'true'})


class _Builder:
    """Collects the parsed lines; validation happens in ``build``."""

    def __init__(self):
        self.sections = {}
        self.invariants = []
        self.transitions = []

    def section(self, keyword, stream):
        if keyword.text in self.sections:
            raise ParseError(
                f'duplicate section "{keyword.text}"', keyword.span)
        stream.expect(TokenType.COLON)
        if keyword.text == 'mode':
            value = stream.expect(
                TokenType.NAME, expected=f'{HOURGLASS_MODE} or {EXTENDED_MODE}')
            if value.text not in (HOURGLASS_MODE, EXTENDED_MODE):
                raise ParseError(
                    f'unknown mode "{value.text}"', value.span,
                    f'{HOURGLASS_MODE} or {EXTENDED_MODE}')
            items = value
        elif keyword.text == 'clocks':
            items = _comma_list(stream, _clock_decl)
        else:
            items = _comma_list(stream, _name)
        stream.expect_end()
        self.sections[keyword.text] = (keyword, items)

    def invariant(self, stream):
        location = _name(stream)
        stream.expect(TokenType.COLON)
        guard = _guard(stream)
        stream.expect_end()
        self.invariants.append((location, guard))

    def transition(self, stream):
        source = _name(stream)
        stream.expect(TokenType.ARROW)
        target = _name(stream)
        stream.expect(TokenType.NAME, 'on')
        label = _name(stream)
        guard, flip, toggle = [], [], []
        if stream.accept(TokenType.NAME, 'when'):
            guard = _guard(stream)
        if stream.accept(TokenType.NAME, 'flip'):
            flip = _clock_set(stream)
        if stream.accept(TokenType.NAME, 'toggle'):
            toggle = _clock_set(stream)
        if not stream.at_end():
            token = stream.current
            raise ParseError(
                f'unexpected {token}', token.span,
                '"when", "flip", "toggle" or end of line')
        self.transitions.append(
            (source, target, label, guard, flip, toggle))

    def _names(self, section):
        return self.sections.get(section, (None, []))[1]

    def build(self):
        for required in ('locations', 'initial'):
            if required not in self.sections:
                raise ParseError(f'missing section "{required}"')
        mode = self.sections.get('mode', (None, None))[1]
        mode = mode.text if mode is not None else HOURGLASS_MODE
        bounds = self._bounds()
        clocks = {x.name: x for x in bounds.clocks}
        locations = _unique(self._names('locations'), 'location')
        for section in ('initial', 'final'):
            for token in self._names(section):
                _declared(token, locations, f'{section} location')
        invariants = []
        for location, guard in self.invariants:
            _declared(location, locations, 'location')
            if location.text in dict(invariants):
                raise ValidationError(
                    f'duplicate invariant for "{location.text}"',
                    location.span)
            invariants.append((
                location.text,
                _make_guard(guard, clocks, bounds, mode, 'invariant')))
        if 'actions' in self.sections:
            actions = _unique(self._names('actions'), 'action')
        else:
            actions = {tr[2].text for tr in self.transitions}
        transitions = []
        for source, target, label, guard, flip, toggle in self.transitions:
            _declared(source, locations, 'location')
            _declared(target, locations, 'location')
            _declared(label, actions, 'action')
            transitions.append(Transition(
                source.text, label.text, target.text,
                _make_guard(guard, clocks, bounds, mode, 'guard'),
                _clock_refs(flip, clocks), _clock_refs(toggle, clocks)))
        try:
            return HourglassAutomaton(
                actions=frozenset(actions),
                locations=tuple(t.text for t in self._names('locations')),
                initial=tuple(t.text for t in self._names('initial')),
                final=frozenset(t.text for t in self._names('final')),
                bounds=bounds,
                invariants=tuple(invariants),
                transitions=tuple(transitions),
                mode=mode)
        except ModelError as e:
            raise ValidationError(str(e)) from e

    def _bounds(self):
        declared = self._names('clocks')
        _unique([name for name, _bound in declared], 'clock')
        pairs = []
        for name, bound in declared:
            if name.text in RESERVED:
                raise ValidationError(
                    f'"{name.text}" cannot be a clock name', name.span)
            value = _integer(bound)
            if value < 1:
                raise ValidationError(
                    f'clock bound must be at least 1: "{bound.text}"',
                    bound.span)
            pairs.append((name.text, value))
        return make_clocks(pairs)


def _integer(token):
    try:
        return int(token.text)
    except ValueError as e:
        raise ParseError(
            f'number too large "{token.text[:20]}..."', token.span) from e


def _name(stream):
    return stream.expect(TokenType.NAME)


def _clock_decl(stream):
    name = _name(stream)
    stream.expect(TokenType.EQUALS)
    bound = stream.expect(TokenType.NUMBER, expected='an integer bound')
    return name, bound


def _comma_list(stream, item):
    items = []
    if stream.at_end():
        return items
    items.append(item(stream))
    while stream.accept(TokenType.COMMA):
        items.append(item(stream))
    return items


def _clock_set(stream):
    stream.expect(TokenType.LBRACE)
    if stream.accept(TokenType.RBRACE):
        return []
    names = _comma_list(stream, _name)
    stream.expect(TokenType.RBRACE, expected='"," or "}"')
    return names


def _atom(stream):
    clock = _name(stream)
    relation = stream.expect(TokenType.RELATION, expected='<, <=, ==, >= or >')
    if stream.peek_is(TokenType.NAME, CX):
        constant = stream.next()
    else:
        constant = stream.expect(TokenType.NUMBER, expected='0 or cx')
    return clock, relation, constant


def _guard(stream):
    if stream.accept(TokenType.NAME, 'true'):
        return []
    atoms = [_atom(stream)]
    while stream.accept(TokenType.AND):
        atoms.append(_atom(stream))
    return atoms


def _unique(tokens, what):
    seen = {}
    for token in tokens:
        if token.text in seen:
            raise ValidationError(
                f'duplicate {what} "{token.text}"', token.span)
        seen[token.text] = token
    return seen


def _declared(token, names, what):
    if token.text not in names:
        raise ValidationError(
            f'undeclared {what} "{token.text}"', token.span)


def _clock_refs(tokens, clocks):
    for token in tokens:
        _declared(token, clocks, 'clock')
    return frozenset(clocks[token.text] for token in tokens)


def _make_guard(atoms, clocks, bounds, mode, what):
    parsed = []
    for clock, relation, constant in atoms:
        _declared(clock, clocks, 'clock')
        value = CX if constant.text == CX else _integer(constant)
        atom = GuardAtom(clocks[clock.text], relation.text, value)
        try:
            check_guard(Guard((atom,)), bounds, mode, what)
        except ModelError as e:
            raise ValidationError(str(e), constant.span) from e
        parsed.append(atom)
    return Guard(tuple(parsed))


def parse_automaton(text):
    """
    Parse an hourglass automaton.

    :param text: file content, str or UTF-8 bytes
    :returns: validated HourglassAutomaton
    :raises ParseError: on the first syntax error
    :raises ValidationError: on the first semantic error (undeclared name,
        illegal constant, ...)
    """
    builder = _Builder()
    for tokens in source_lines(text):
        stream = TokenStream(tokens)
        keyword = stream.expect(
            TokenType.NAME, expected='a section, "invariant" or "trans"')
        if keyword.text in SECTIONS:
            builder.section(keyword, stream)
        elif keyword.text == 'invariant':
            builder.invariant(stream)
        elif keyword.text == 'trans':
            builder.transition(stream)
        else:
            raise ParseError(
                f'unknown keyword "{keyword.text}"', keyword.span,
                'a section, "invariant" or "trans"')
    return builder.build()


def read_automaton(path):
    """
    Read an hourglass automaton from a file.

    :param path: path to a ``.hga`` file
    :returns: HourglassAutomaton
    :raises OSError: if the file cannot be read
    :raises ParseError: if the file is not a valid automaton
    """
    with open(path, 'rb') as fp:
        return parse_automaton(fp.read())


def _names_line(keyword, names):
    return f'{keyword}: {", ".join(names)}'.rstrip()


def _set_text(clocks):
    return '{' + ', '.join(x.name for x in sorted(clocks)) + '}'


def serialize_automaton(automaton):
    """
    Canonical text of an automaton.

    Clocks, locations and initial locations keep their declaration order
    (the clock order is part of the model); actions and final locations are
    sorted; transitions and invariants keep their order.

    :param automaton: HourglassAutomaton
    :returns: str, ending with a newline
    """
    lines = []
    if automaton.mode != HOURGLASS_MODE:
        lines.append(f'mode: {automaton.mode}')
    lines.append(_names_line('clocks', [
        f'{x.name}={c}' for x, c in automaton.bounds.items()]))
    lines.append(_names_line('actions', sorted(automaton.actions)))
    lines.append(_names_line('locations', automaton.locations))
    lines.append(_names_line('initial', automaton.initial))
    lines.append(_names_line('final', sorted(automaton.final)))
    for location, guard in automaton.invariants:
        lines.append(f'invariant {location}: {guard}')
    for tr in automaton.transitions:
        text = f'trans {tr.source} -> {tr.target} on {tr.action}'
        if tr.guard:
            text += f' when {tr.guard}'
        if tr.flip:
            text += f' flip {_set_text(tr.flip)}'
        if tr.toggle:
            text += f' toggle {_set_text(tr.toggle)}'
        lines.append(text)
    return '\n'.join(lines) + '\n'
