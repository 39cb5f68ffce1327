def walk(n):
    total = 0
    for i in range(n):
        total += i
    for j in range(0, n, 2):
        total += j
    return total
