def f(data, k):
    misses = 0
    for h in data:
        if h > 2:
            misses += 1
    total = 1
    for entry in data[:3]:
        total *= entry
    squares = [data[q] % 3 for q in range(len(data))]
    large = 0
    for t in data:
        if t < 5:
            large = large + 1
    return (misses, total, squares, large,)
