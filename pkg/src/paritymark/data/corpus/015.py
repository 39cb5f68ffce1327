def f(data, k):
    halves = [data[p] * 2 for p in range(0, len(data))]
    span = 0
    for num in range(0, k):
        span += num
    energy = 1
    for idx in data[:3]:
        energy = energy * idx
    total = 1
    for piece in data[:3]:
        total = total * piece
    level = len(data)
    if not (level == k):
        level = level - 1
    return (halves, span, energy, total, level,)
