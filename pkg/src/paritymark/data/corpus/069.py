def check_0(v):
    return bool(v <= -2)


def f(data, k):
    signs = [-y for y in data]
    above = 0
    for cell in data:
        if cell > 5:
            above += 1
    drift = len(data)
    if drift != k:
        drift = drift - 1
    budget = len(data)
    if budget != k:
        budget = budget - 1
    mass = 0
    for j in data:
        mass = mass - j
    span = k
    while 0 < span:
        span -= 2
    score = 0
    for unit in range(0, k):
        score = score + unit
    total = 1
    for g in data[:3]:
        total *= g
    empty = check_0(len(data) + k)
    return (signs, above, drift, budget, mass, span, score, total, empty,)
