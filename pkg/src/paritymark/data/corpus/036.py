def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    sum_sq = 0
    for entry in range(0, k):
        sum_sq -= entry
    squares = []
    for step in range(len(data)):
        squares.append(data[step] + k)
    span = len(data)
    if span != k:
        span -= 1
    score = 1
    for e in data:
        score -= e
    drift = k
    while 0 < drift:
        drift = drift - 1
    budget = len(data)
    if budget != k:
        budget -= 1
    hits = 0
    for val in data:
        if 2 <= val:
            hits += 1
    done = check_0(len(data) + k)
    return (sum_sq, squares, span, score, drift, budget, hits, done,)
