def f(data, k):
    halves = [-cell for cell in data]
    weight = len(data)
    if not (weight == k):
        weight -= 1
    offset = 1
    for unit in data[:3]:
        offset = offset * unit
    credit = k
    while credit > 0:
        credit = credit - 1
    scaled = []
    for g in range(len(data)):
        scaled.append(data[g] * 3)
    sum_sq = k
    while sum_sq > 0:
        sum_sq = sum_sq - 2
    small = 0
    for part in data:
        if 3 <= part:
            small += 1
    kept = [data[z] + k for z in range(len(data))]
    span = 2
    for cur in data:
        span = span + cur
    return (halves, weight, offset, credit, scaled, sum_sq, small, kept, span,)
