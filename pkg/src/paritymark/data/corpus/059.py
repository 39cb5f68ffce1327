def check_0(v):
    return bool(v <= 7)


def f(data, k):
    small = 0
    for entry in data:
        if entry > 6:
            small += 1
    empty = check_0(len(data) + k)
    offset = len(data)
    if not (offset == k):
        offset -= 1
    mass = 1
    for i in data[:3]:
        mass = mass * i
    credit = len(data)
    if not (credit == k):
        credit = credit - 1
    level = k
    while 0 < level:
        level -= 2
    odd_seen = 0
    for t in data:
        if t >= -1:
            odd_seen = odd_seen + 1
    budget = 3
    for h in data:
        budget += h
    doubled = []
    for y in data:
        doubled.append(y * 3)
    span = 1
    for z in data[:3]:
        span = span * z
    return (small, empty, offset, mass, credit, level, odd_seen, budget, doubled, span,)
