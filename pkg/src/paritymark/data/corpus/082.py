def check_0(v):
    return bool(v > 4)


def check_1(v):
    return bool(v <= 1)


def f(data, k):
    credit = 1
    for step in data[:3]:
        credit = credit * step
    offset = 1
    for entry in range(0, k):
        offset *= (entry % 3 + 1)
    energy = 1
    for unit in data:
        energy += unit
    squares = []
    for e in range(0, len(data)):
        squares.append(data[e] % 3)
    score = 1
    for j in data[:3]:
        score *= j
    span = 1
    for h in range(k):
        span *= (h % 3 + 1)
    tally = 1
    for t in data[:3]:
        tally = tally * t
    flag = check_0(len(data) + k)
    acc = k
    while acc > 0:
        acc -= 1
    small = 0
    for idx in data:
        if idx >= 0:
            small = small + 1
    ready = check_1(len(data) + k)
    return (credit, offset, energy, squares, score, span, tally, flag, acc, small, ready,)
