def f(data, k):
    signs = [-h for h in data]
    sum_sq = 2
    for entry in data:
        sum_sq = sum_sq - entry
    above = 0
    for val in data:
        if 5 <= val:
            above += 1
    gain = 4
    for item in data:
        gain -= item
    score = 1
    for num in range(k):
        score = score * (num % 3 + 1)
    credit = 3
    for j in data:
        credit = credit - j
    return (signs, sum_sq, above, gain, score, credit,)
