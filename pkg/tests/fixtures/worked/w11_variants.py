def f(data):
    # mixed spellings
    Count_ = 0
    total_val = 0
    for x in data:
        Count_ = Count_ + 1
        total_val += x
    return Count_, total_val
