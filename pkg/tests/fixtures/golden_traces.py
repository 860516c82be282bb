"""
Golden sweep traces on the bridged-triangles graph (hand-placed order) and
the triangle.

Each row is (step label, {encoded index: ascending x-coefficients}).
Bipartition values are given as text because they are trivariate.
"""

INDEPENDENCE_TRACE = [
    ("init", {"{}": [1]}),
    ("+1", {"{}": [1], "{1}": [0, 1]}),
    ("+3", {"{}": [1], "{1}": [0, 1], "{3}": [0, 1], "{1,3}": [0, 0, 1]}),
    ("{1,3}", {"{}": [1], "{1}": [0, 1], "{3}": [0, 1]}),
    ("+2", {"{}": [1], "{1}": [0, 1], "{3}": [0, 1], "{2}": [0, 1],
            "{1,2}": [0, 0, 1], "{2,3}": [0, 0, 1]}),
    ("{1,2}", {"{}": [1], "{1}": [0, 1], "{3}": [0, 1], "{2}": [0, 1], "{2,3}": [0, 0, 1]}),
    ("{2,3}", {"{}": [1], "{1}": [0, 1], "{3}": [0, 1], "{2}": [0, 1]}),
    ("-1", {"{}": [1, 1], "{3}": [0, 1], "{2}": [0, 1]}),
    ("-3", {"{}": [1, 2], "{2}": [0, 1]}),
    ("+4", {"{}": [1, 2], "{2}": [0, 1], "{4}": [0, 1, 2], "{2,4}": [0, 0, 1]}),
    ("{2,4}", {"{}": [1, 2], "{2}": [0, 1], "{4}": [0, 1, 2]}),
    ("-2", {"{}": [1, 3], "{4}": [0, 1, 2]}),
    ("+5", {"{}": [1, 3], "{4}": [0, 1, 2], "{5}": [0, 1, 3], "{4,5}": [0, 0, 1, 2]}),
    ("{4,5}", {"{}": [1, 3], "{4}": [0, 1, 2], "{5}": [0, 1, 3]}),
    ("+6", {"{}": [1, 3], "{4}": [0, 1, 2], "{5}": [0, 1, 3], "{6}": [0, 1, 3],
            "{4,6}": [0, 0, 1, 2], "{5,6}": [0, 0, 1, 3]}),
    ("{4,6}", {"{}": [1, 3], "{4}": [0, 1, 2], "{5}": [0, 1, 3], "{6}": [0, 1, 3],
               "{5,6}": [0, 0, 1, 3]}),
    ("-4", {"{}": [1, 4, 2], "{5}": [0, 1, 3], "{6}": [0, 1, 3], "{5,6}": [0, 0, 1, 3]}),
    ("{5,6}", {"{}": [1, 4, 2], "{5}": [0, 1, 3], "{6}": [0, 1, 3]}),
    ("-5", {"{}": [1, 5, 5], "{6}": [0, 1, 3]}),
    ("-6", {"{}": [1, 6, 8]}),
]

K2 = [0, -1, 1]
K3 = [0, 2, -3, 1]
P4 = [0, -2, 5, -4, 1]
P5 = [0, 2, -7, 9, -5, 1]
P6 = [0, -4, 16, -25, 19, -7, 1]

CHROMATIC_TRACE = [
    ("init", {"{}": [1]}),
    ("+1", {"1": [0, 1]}),
    ("+3", {"1|3": K2, "1,3": [0, 1]}),
    ("{1,3}", {"1|3": K2}),
    ("+2", {"1,2|3": K2, "1|2,3": K2, "1|2|3": K3}),
    ("{1,2}", {"1|2,3": K2, "1|2|3": K3}),
    ("{2,3}", {"1|2|3": K3}),
    ("-1", {"2|3": K3}),
    ("-3", {"2": K3}),
    ("+4", {"2|4": P4, "2,4": K3}),
    ("{2,4}", {"2|4": P4}),
    ("-2", {"4": P4}),
    ("+5", {"4|5": P5, "4,5": P4}),
    ("{4,5}", {"4|5": P5}),
    ("+6", {"4,6|5": P5, "4|5,6": P5, "4|5|6": P6}),
    ("{4,6}", {"4|5,6": P5, "4|5|6": P6}),
    ("-4", {"5,6": P5, "5|6": P6}),
    ("{5,6}", {"5|6": P6}),
    ("-5", {"6": P6}),
    ("-6", {"{}": P6}),
]

DOMINATION_STATE_COUNTS = [1, 2, 4, 4, 8, 8, 8, 4, 2, 4, 4, 3, 6, 5, 10, 9, 7, 5, 2, 1]

DOMINATION_ROWS = {
    "-2": {
        "[{4},{},{}]": [0, 2, 1],
        "[{},{4},{}]": [0, 1, 2, 1],
        "[{},{},{4}]": [0, 0, 3, 3, 1],
    },
    "-5": {
        "[{},{},{6}]": [0, 0, 3, 9, 10, 5, 1],
        "[{},{6},{}]": [0, 0, 6, 9, 5, 1],
    },
    "-6": {
        "[{},{},{}]": [0, 0, 9, 18, 15, 6, 1],
    },
}

BIPARTITION_STATE_COUNTS = [1, 2, 4, 6, 12, 16, 20, 9, 3, 1]

BIPARTITION_ROWS = {
    "-3": {
        "[{},{2},{}]": "1 + 2*x + 2*x*y*z + x^2",
        "[{},{},{2}]": "x + 2*x*y*z + x*y^2*z^2 + 2*x^2 + 4*x^2*y*z + 2*x^2*y*z^2 + x^3",
        "[{2},{},{}]": "2*x*y*z + 2*x*y^2*z^2 + 2*x^2*y*z + x^2*y*z^2",
    },
    "-2": {
        "[{},{},{}]": "1 + 3*x + 6*x*y*z + 3*x*y^2*z^2 + 3*x^2 + 6*x^2*y*z + 3*x^2*y*z^2 + x^3",
    },
}
