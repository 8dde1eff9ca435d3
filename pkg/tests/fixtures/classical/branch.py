def pick(flag, a, b):
    if flag:
        return a
    else:
        return b
