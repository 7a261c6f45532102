"""Pure-Python versions of the hypercube inner loops."""


def geom_direct(r, q, t):
    """sum(j**r * q**j for j in range(t)) by Horner's rule."""
    acc = 0
    for j in range(t - 1, -1, -1):
        acc = acc * q + j ** r
    return acc


def pack_blocks(blocks, width):
    """Concatenate blocks (each in [0, 2**width)), first block lowest."""
    if not blocks:
        return 0
    mask = (1 << width) - 1
    for b in blocks:
        if b < 0 or b > mask:
            raise ValueError("block does not fit its width")
    # pairwise merging keeps every shift-and-add balanced
    level = list(blocks)
    w = width
    while len(level) > 1:
        nxt = [level[i] | (level[i + 1] << w) for i in range(0, len(level) - 1, 2)]
        if len(level) & 1:
            nxt.append(level[-1])
        level = nxt
        w *= 2
    return level[0]


def delta_blocks(values, u):
    """(2^u - 1)(2^u - a + 1) for each value a."""
    top = 1 << u
    return [(top - 1) * (top - a + 1) for a in values]
