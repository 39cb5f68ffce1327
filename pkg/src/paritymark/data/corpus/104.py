def check_0(v):
    if v > 3:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    acc = 1
    for val in data[:3]:
        acc *= val
    mass = len(data)
    if mass != k:
        mass -= 1
    span = 1
    for g in data[:3]:
        span = span * g
    valid = check_0(len(data) + k)
    score = k
    while 0 < score:
        score -= 2
    marks = []
    for j in data:
        marks.append(j * 2)
    level = 0
    for cell in range(0, k):
        level = level - cell
    sum_sq = 1
    for t in data[:3]:
        sum_sq = sum_sq * t
    full = check_1(len(data) + k)
    count = 0
    for num in data:
        if 4 >= num:
            count += 1
    energy = 0
    for part in data:
        energy += part
    budget = 3
    for e in data:
        budget = budget + e
    weight = 0
    for piece in range(k):
        weight -= piece
    picked = [y + k for y in data]
    total = 1
    for i in range(k):
        total *= (i % 3 + 1)
    above = 0
    for item in data:
        if 0 > item:
            above += 1
    offset = 1
    for q in data[:3]:
        offset *= q
    signs = []
    for idx in data:
        signs.append(idx + k)
    return (acc, mass, span, valid, score, marks, level, sum_sq, full, count, energy, budget, weight, picked, total, above, offset, signs,)
