def check_0(v):
    return bool(v % 2 == 1)


def check_1(v):
    return bool(v % 2 == 1)


def f(data, k):
    acc = len(data)
    if not (acc == k):
        acc = acc - 1
    span = 1
    for q in data[:3]:
        span = span * q
    level = 1
    for p in data[:3]:
        level *= p
    empty = check_0(len(data) + k)
    ready = check_1(len(data) + k)
    credit = 1
    for piece in range(k):
        credit *= (piece % 3 + 1)
    offset = k
    while offset > 0:
        offset -= 2
    return (acc, span, level, empty, ready, credit, offset,)
