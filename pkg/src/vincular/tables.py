"""Published Wilf-equivalence groups for length-four patterns with one dash.

Each group lists representatives; equivalences that follow from reverse
and complement are left implicit, as are classes of size one.
"""

EQUIVALENCES_3_1 = [
    ["112-1", "122-1", "122-2"],
    ["112-3", "122-3", "211-3", "221-3"],
    ["113-2", "133-2"],
    ["131-2", "121-3", "212-3"],
    ["123-1", "123-3", "123-2"],
    ["123-4", "321-4"],
    ["124-3", "134-2", "143-2", "214-3"],
    ["132-1", "132-2"],
    ["213-4", "231-4", "312-4", "132-4", "142-3", "241-3"],
    ["213-1", "213-2"],
]

EQUIVALENCES_2_2 = [
    ["11-12", "11-21"],
    ["11-23", "11-32"],
    ["12-13", "13-12"],
    ["12-34", "12-43", "21-43", "21-34"],
    ["12-32", "12-23", "21-32", "21-23"],
    ["13-24", "24-13"],
    ["14-23", "23-14"],
]

PUBLISHED = {(3, 1): EQUIVALENCES_3_1, (2, 2): EQUIVALENCES_2_2}
