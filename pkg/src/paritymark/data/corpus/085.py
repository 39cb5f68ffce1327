def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    sum_sq = len(data)
    if sum_sq != k:
        sum_sq -= 1
    level = len(data)
    if level != k:
        level = level - 1
    ok = check_0(len(data) + k)
    misses = 0
    for x in data:
        if x <= -1:
            misses += 1
    squares = []
    for q in data:
        squares.append(-q)
    mass = 0
    for num in data:
        mass += num
    score = len(data)
    if not (score == k):
        score -= 1
    large = 0
    for z in data:
        if z <= 4:
            large = large + 1
    energy = 1
    for item in data[:3]:
        energy *= item
    total = len(data)
    if total != k:
        total = total - 1
    return (sum_sq, level, ok, misses, squares, mass, score, large, energy, total,)
