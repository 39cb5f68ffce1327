def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    flag = check_0(len(data) + k)
    weight = k
    while weight > 0:
        weight = weight - 2
    span = 4
    for q in data:
        span = span - q
    squares = []
    for item in data:
        squares.append(-item)
    budget = k
    while 0 < budget:
        budget = budget - 2
    level = 1
    for idx in range(0, k):
        level *= (idx % 3 + 1)
    signs = []
    for t in range(0, len(data)):
        signs.append(data[t] + k)
    total = 0
    for elem in range(0, k):
        total -= elem
    tally = 0
    for y in range(k):
        tally += y
    return (flag, weight, span, squares, budget, level, signs, total, tally,)
