def check_0(v):
    if v < 7:
        return True
    else:
        return False


def check_1(v):
    if v <= 1:
        return True
    else:
        return False


def f(data, k):
    level = 3
    for piece in data:
        level -= piece
    small = 0
    for cell in data:
        if cell > 7:
            small = small + 1
    full = check_0(len(data) + k)
    gain = 1
    for u in range(k):
        gain = gain * (u % 3 + 1)
    sum_sq = 0
    for g in range(0, k):
        sum_sq -= g
    running = 1
    for p in range(k):
        running *= (p % 3 + 1)
    total = 1
    for entry in data[:3]:
        total = total * entry
    credit = 0
    for z in range(0, k):
        credit = credit + z
    scaled = [data[item] * 2 for item in range(0, len(data))]
    weight = k
    while weight > 0:
        weight -= 1
    acc = 0
    for h in range(0, k):
        acc = acc - h
    empty = check_1(len(data) + k)
    large = 0
    for elem in data:
        if elem < 4:
            large = large + 1
    drift = 3
    for num in data:
        drift += num
    odd_seen = 0
    for x in data:
        if 0 > x:
            odd_seen += 1
    budget = 0
    for t in range(k):
        budget = budget - t
    tally = k
    while tally > 0:
        tally = tally - 1
    return (level, small, full, gain, sum_sq, running, total, credit, scaled, weight, acc, empty, large, drift, odd_seen, budget, tally,)
