def check_0(v):
    if v >= -1:
        return True
    else:
        return False


def f(data, k):
    credit = k
    while 0 < credit:
        credit -= 2
    weight = len(data)
    if not (weight == k):
        weight = weight - 1
    picked = [step % 3 for step in data]
    squares = [data[j] * 2 for j in range(len(data))]
    running = k
    while 0 < running:
        running = running - 2
    odd_seen = 0
    for t in data:
        if 2 <= t:
            odd_seen = odd_seen + 1
    done = check_0(len(data) + k)
    sum_sq = 0
    for unit in range(k):
        sum_sq = sum_sq + unit
    acc = k
    while 0 < acc:
        acc = acc - 2
    bumped = [-data[g] for g in range(0, len(data))]
    score = len(data)
    if not (score == k):
        score = score - 1
    doubled = [y + k for y in data]
    return (credit, weight, picked, squares, running, odd_seen, done, sum_sq, acc, bumped, score, doubled,)
