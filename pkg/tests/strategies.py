"""Hypothesis strategies for random prefix codes and (nested) code trees."""

import hypothesis.strategies as st

from codetrees import CodeTree


@st.composite
def prefix_code_words(draw, arity, max_words=6, max_len=4):
    """A random prefix code, grown by splitting leaves into 2..arity children."""
    n = draw(st.integers(1, max_words))
    words = [()]
    while len(words) < n:
        growable = [i for i, w in enumerate(words) if len(w) < max_len]
        if not growable:
            break
        i = draw(st.sampled_from(growable))
        room = n - len(words)
        fanout = draw(st.integers(2, min(arity, room + 1)))
        base = words.pop(i)
        words.extend(base + (j,) for j in range(fanout))
    return words


@st.composite
def code_trees(draw, payloads=st.integers(0, 9), arity=None, max_words=6):
    d = arity if arity is not None else draw(st.sampled_from((2, 3)))
    words = draw(prefix_code_words(d, max_words=max_words))
    return CodeTree(d, {w: draw(payloads) for w in words})


@st.composite
def nested_trees(draw, payloads=st.integers(0, 9), arity=None):
    """Trees of trees; inner arity always matches the outer."""
    d = arity if arity is not None else draw(st.sampled_from((2, 3)))
    outer = draw(prefix_code_words(d, max_words=4))
    return CodeTree(d, {w: draw(code_trees(payloads, arity=d, max_words=4)) for w in outer})


@st.composite
def doubly_nested_trees(draw, payloads=st.integers(0, 9)):
    """Three levels deep, for the associativity law."""
    d = draw(st.sampled_from((2, 3)))
    outer = draw(prefix_code_words(d, max_words=3))
    return CodeTree(d, {w: draw(nested_trees(payloads, arity=d)) for w in outer})
