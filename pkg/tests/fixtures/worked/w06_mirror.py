def clamp(v):
    low = v < 0
    high = 10 > v
    mid = v <= -3
    flag = 2.5 >= v
    other = v < True
    both = v < 1 < 5
    return low, high, mid, flag, other, both
