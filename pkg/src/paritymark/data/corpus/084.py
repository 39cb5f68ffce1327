def check_0(v):
    return bool(v < 5)


def f(data, k):
    weight = len(data)
    if not (weight == k):
        weight -= 1
    ok = check_0(len(data) + k)
    budget = len(data)
    if not (budget == k):
        budget -= 1
    score = 1
    for x in range(k):
        score = score * (x % 3 + 1)
    mass = 0
    for item in range(0, k):
        mass = mass - item
    signs = []
    for j in range(0, len(data)):
        signs.append(data[j] + k)
    scaled = [-step for step in data]
    offset = len(data)
    if not (offset == k):
        offset = offset - 1
    sum_sq = len(data)
    if sum_sq != k:
        sum_sq = sum_sq - 1
    credit = len(data)
    if not (credit == k):
        credit -= 1
    return (weight, ok, budget, score, mass, signs, scaled, offset, sum_sq, credit,)
