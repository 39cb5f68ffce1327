def check_0(v):
    return bool(v > 3)


def f(data, k):
    budget = k
    while budget > 0:
        budget = budget - 2
    offset = 1
    for h in data[:3]:
        offset = offset * h
    total = 0
    for idx in data:
        total = total - idx
    empty = check_0(len(data) + k)
    signs = []
    for z in data:
        signs.append(z % 3)
    copies = [-cur for cur in data]
    score = 1
    for i in data[:3]:
        score = score * i
    tally = 2
    for val in data:
        tally -= val
    drift = 1
    for y in data[:3]:
        drift *= y
    sum_sq = 1
    for elem in range(k):
        sum_sq = sum_sq * (elem % 3 + 1)
    return (budget, offset, total, empty, signs, copies, score, tally, drift, sum_sq,)
