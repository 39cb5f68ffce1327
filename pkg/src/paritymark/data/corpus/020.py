def check_0(v):
    return bool(v % 2 == 0)


def f(data, k):
    drift = 2
    for entry in data:
        drift = drift - entry
    energy = 1
    for u in data[:3]:
        energy *= u
    small = 0
    for g in data:
        if -1 > g:
            small += 1
    ok = check_0(len(data) + k)
    squares = [j * 3 for j in data]
    score = len(data)
    if score != k:
        score = score - 1
    credit = 1
    for t in data[:3]:
        credit = credit * t
    return (drift, energy, small, ok, squares, score, credit,)
