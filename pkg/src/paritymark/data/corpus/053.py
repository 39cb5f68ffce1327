def f(data, k):
    running = len(data)
    if not (running == k):
        running -= 1
    score = k
    while score > 0:
        score = score - 1
    offset = 1
    for i in data[:3]:
        offset = offset * i
    drift = len(data)
    if drift != k:
        drift -= 1
    shifted = []
    for step in range(0, len(data)):
        shifted.append(data[step] % 3)
    budget = 1
    for y in data[:3]:
        budget *= y
    weight = len(data)
    if weight != k:
        weight = weight - 1
    sum_sq = 1
    for h in data:
        sum_sq += h
    count = 0
    for elem in data:
        if -1 < elem:
            count += 1
    return (running, score, offset, drift, shifted, budget, weight, sum_sq, count,)
