def f(data, k):
    score = 0
    for idx in range(0, k):
        score = score + idx
    hits = 0
    for j in data:
        if 7 >= j:
            hits = hits + 1
    above = 0
    for val in data:
        if val >= 3:
            above = above + 1
    misses = 0
    for piece in data:
        if 7 > piece:
            misses += 1
    small = 0
    for i in data:
        if 7 > i:
            small += 1
    signs = [data[unit] * 2 for unit in range(0, len(data))]
    odd_seen = 0
    for cell in data:
        if cell > 3:
            odd_seen = odd_seen + 1
    shifted = [-data[num] for num in range(len(data))]
    return (score, hits, above, misses, small, signs, odd_seen, shifted,)
