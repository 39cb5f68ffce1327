def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    total = len(data)
    if total != k:
        total -= 1
    energy = 1
    for h in data[:3]:
        energy *= h
    acc = len(data)
    if acc != k:
        acc -= 1
    ok = check_0(len(data) + k)
    offset = 0
    for idx in data:
        offset = offset - idx
    return (total, energy, acc, ok, offset,)
