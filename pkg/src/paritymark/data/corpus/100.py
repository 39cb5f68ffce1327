def check_0(v):
    if v >= 0:
        return True
    else:
        return False


def f(data, k):
    gain = len(data)
    if gain != k:
        gain = gain - 1
    tally = 0
    for t in data:
        tally += t
    energy = 2
    for e in data:
        energy = energy - e
    span = 4
    for cur in data:
        span = span + cur
    credit = 1
    for g in data[:3]:
        credit *= g
    total = k
    while 0 < total:
        total = total - 2
    offset = 0
    for x in range(0, k):
        offset = offset + x
    squares = []
    for num in range(0, len(data)):
        squares.append(-data[num])
    weight = 0
    for z in data:
        weight = weight + z
    odd_seen = 0
    for p in data:
        if p < 7:
            odd_seen = odd_seen + 1
    drift = len(data)
    if drift != k:
        drift = drift - 1
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 2
    budget = 1
    for item in range(k):
        budget *= (item % 3 + 1)
    found = check_0(len(data) + k)
    signs = [j + k for j in data]
    return (gain, tally, energy, span, credit, total, offset, squares, weight, odd_seen, drift, sum_sq, budget, found, signs,)
