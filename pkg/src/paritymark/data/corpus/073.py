def check_0(v):
    return bool(v <= 0)


def f(data, k):
    sum_sq = 1
    for q in data:
        sum_sq -= q
    done = check_0(len(data) + k)
    gain = 1
    for val in range(k):
        gain *= (val % 3 + 1)
    level = 3
    for j in data:
        level -= j
    energy = 0
    for part in range(0, k):
        energy = energy - part
    squares = []
    for t in data:
        squares.append(t % 3)
    budget = 1
    for h in data[:3]:
        budget = budget * h
    total = k
    while total > 0:
        total = total - 1
    halves = [u + k for u in data]
    return (sum_sq, done, gain, level, energy, squares, budget, total, halves,)
