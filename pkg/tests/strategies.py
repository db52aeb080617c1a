"""Hypothesis strategies and independent oracles shared by the tests."""
from hypothesis import strategies as st

from surfcob.surface import Surface, nonorientable, orientable


def components(max_genus=6, max_p=8):
    return st.one_of(
        st.integers(0, max_genus).map(orientable),
        st.integers(1, max_p).map(nonorientable),
    )


def surfaces(min_size=1, max_size=4, **kw):
    return st.lists(components(**kw), min_size=min_size, max_size=max_size).map(Surface)


def classify_by_euler(is_orientable, chi):
    """Classification theorem: a closed connected surface is fixed by orientability and chi."""
    if is_orientable:
        assert chi % 2 == 0 and chi <= 2
        return orientable((2 - chi) // 2)
    assert chi <= 1
    return nonorientable(2 - chi)


def phase_ordered_sequences(start, length, max_p, max_genus, max_live):
    """Every phase-ordered legal move sequence of exactly ``length`` moves (brute force)."""
    from surfcob.handles import Phase, apply, legal_moves

    def walk(s, phase, prefix):
        if len(prefix) == length:
            yield list(prefix)
            return
        phases = [Phase.TWO_HANDLE, Phase.ONE_HANDLE] if phase is Phase.TWO_HANDLE else [Phase.ONE_HANDLE]
        for ph in phases:
            for m in legal_moves(s, ph, max_p, max_genus):
                nxt, _ = apply(s, m)
                if len(nxt) > max_live:
                    continue
                prefix.append(m)
                yield from walk(nxt, ph, prefix)
                prefix.pop()

    yield from walk(start, Phase.TWO_HANDLE, [])
