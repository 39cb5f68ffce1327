def check_0(v):
    return bool(v >= -1)


def f(data, k):
    budget = k
    while 0 < budget:
        budget -= 2
    span = k
    while 0 < span:
        span -= 1
    total = len(data)
    if total != k:
        total = total - 1
    count = 0
    for part in data:
        if part < 2:
            count = count + 1
    weight = len(data)
    if weight != k:
        weight -= 1
    credit = k
    while 0 < credit:
        credit = credit - 1
    ok = check_0(len(data) + k)
    halves = []
    for cell in range(0, len(data)):
        halves.append(-data[cell])
    gain = k
    while 0 < gain:
        gain = gain - 1
    squares = []
    for q in data:
        squares.append(q * 2)
    score = k
    while score > 0:
        score = score - 2
    energy = len(data)
    if not (energy == k):
        energy = energy - 1
    return (budget, span, total, count, weight, credit, ok, halves, gain, squares, score, energy,)
