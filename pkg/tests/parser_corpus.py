ROUNDTRIP = [
    "C1", "C2", "C12", "C360", "D3", "D10", "Q8", "Q16", "Q128", "S1",
    "S4", "A4", "A5", "E(2,1)", "E(3,2)", "E(5,3)", "Heis(3)", "Heis(7)", "SL2(2)", "SL2(5)",
    "GL2(3)", "GL2(31)", "C2 x C2", "C4 x S3", "C2 x C3 x C5", "Q8 x Q8", "(C2 x C3) x C5",
    "C2 x (C3 x C5)", "C2 x (C3 x (C5 x C7))", "((C2 x C2) x C2) x C2", "A5 x C4",
    "sd(C9, C3, [[4]])", "sd(C5, C4, [[2]])", "sd(C7,C3,[[2]])", "sd(C4 x C2, C4, [[1,0],[1,1]])",
    "sd(C2 x C2, C9, [[0, 1], [1, 1]])", "sd(E(2,2), C3, [[0,1],[1,1]])", "sd((C3 x C3), C2, [[-1,0],[0,-1]])",
    "sd(C9, C3, [[4]]) x C3", "C3 x sd(C9, C3, [[4]])", "(sd(C9, C3, [[4]]) x C3) x sd(C5, C4, [[2]])",
    "sd(C5, C4, [[2]]) x (Q8 x C3)", "Heis(5) x E(2,2)", "SL2(3) x C2", "  C4   x  S3  ",
    "(((Q8)))", "D4 x (D5 x D6)", "sd(C3 x C3 x C3, C3, [[1,1,0],[0,1,1],[0,0,1]])",
    "sd(C25, C5, [[6]]) x C5", "GL2(2) x (SL2(3) x sd(C7, C3, [[2]]))",
]

# (text, position of the first offending character)
MALFORMED = [
    ("", 0),
    ("C", 1),
    ("C4 x", 4),
    ("C4 x x C2", 5),
    ("Q12", 0),
    ("Z4", 0),
    ("sd(C4, C2, [[1,0]])", 11),
    ("sd(S3, C2, [[1]])", 3),
    ("(C4 x C2", 8),
    ("C4 ^ C2", 3),
    ("Heis(2)", 0),
    ("E(4,2)", 0),
]
