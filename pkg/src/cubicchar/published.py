"""Published data for the cubic-surface centers (n = 3, and B_3 for n = 4).

Polynomials are stored verbatim in juxtaposition notation (``lm^3z^4``) and
parsed against the generator names of the relevant ring.  Integration
tables are keyed by exponent tuples.
"""

# int_{B_1} h^j eps^(8-j), keyed by j
B1_INTEGRALS = {0: -996, 1: -146, 2: -16, 3: -1}

# int_{B_2} h^j eps^k phi^(17-j-k), keyed by (j, k)
_B2_ROWS = {
    0: [-1370200, -641680, 251160, 24388, -49400, 12900, 4460, -4120, 996],
    1: [-345280, -3640, 31668, -10790, -320, 1860, -820, 146, 0],
    2: [-40040, 8008, 0, -880, 440, -120, 16, 0, 0],
    3: [-2002, 715, -220, 55, -10, 1, 0, 0, 0],
}
B2_INTEGRALS = {(j, k): v for j, row in _B2_ROWS.items() for k, v in enumerate(row)}

# int_{B_3} l^j e^(6-j), keyed by j; plus int l^3 m^3 = 1
B3_INTEGRALS_LE = {0: 20, 1: 10, 2: 4, 3: 1}
B3_INTEGRAL_LM = 1

# int_{B_4} m^j e^k z^(8-j-k), keyed by (j, k), k >= 1
_B4_ME_ROWS = {
    0: [-1820, -580, 340, 12, -60, 20],
    1: [-890, 190, 54, -42, 10, 0],
    2: [0, 68, -24, 4, 0, 0],
    3: [51, -9, 1, 0, 0, 0],
}
B4_INTEGRALS_ME = {(j, k + 1): v for j, row in _B4_ME_ROWS.items() for k, v in enumerate(row)
              if j + k + 1 <= 8}

# int_{B_4} m^j l^k z^(8-j-k), keyed by (j, k)
_B4_ML_ROWS = {  # row l^k, column m^j
    0: [13720, 1610, -600, -175],
    1: [1610, -230, -35, 21],
    2: [-600, -35, 46, 6],
    3: [-175, 21, 6, 1],
}
B4_INTEGRALS_ML = {(j, k): v for k, row in _B4_ML_ROWS.items() for j, v in enumerate(row)}

C_N_B3_N3 = """
1672560l^3m^3 - 66343820m^3e^3 + 36537350m^2e^4 - 10851224m e^5 + 1356403e^6 + 209440 l^3
m^2 + 474320 l^2 m^3 + 8045100 m^3 e^2 - 5907690 m^2 e^3 + 2193180 m e^4 - 328977 e^5 +
15960 l^3 m + 53560 l^2 m^2 + 81680 l m^3 - 582940 m^3 e + 642110 m^2 e^2 - 317840 m e^3 +
59595 e^4 + 560 l^3 + 3720 l^2 m + 8400 l m^2 + 6460m^3 - 42166 m^2 e + 31308 m e^2 - 7827
e^3 + 120 l^2 + 536 l m + 610 m^2 - 1880 m e + 705 e^2 + 16 l + 36 m - 39 e + 1
"""

C_N_B3_N4 = """
8604607900l^4m^4 + 1511859296400m^4e^4 - 956335227000m^3e^5 + 379626653775m^2e^6-
86448428700me^7 + 8644842870e^8 + 699244875l^4m^3 + 1520696100l^3m^4 - 107772730500m^4e^3
+ 85215404025m^3e^4 - 40592536260m^2e^5 + 10784338950me^6 - 1232495880e^7 + 40828725l^4m^2
+ 117863200l^3m^3 + 192910550l^2m^4 + 5484228225m^4e^2 - 5781808210m^3e^3 +
3442721815m^2e^4 - 1097565900m e^5 + 146342120e^6 + 1525545l^4 m + 6578880 l^3 m^2 +
14291235 l^2 m^3 + 15643810 l m^4 - 177497950 m^4 e + 280693735 m^3 e^2 - 222848500 m^2
e^3 + 88807250 m e^4 - 14209160 e^5 + 27405 l^4 + 235480 l^3 m + 764065 l^2 m^2 + 1109920
l m^3 + 609280 m^4 - 8685470 m^3 e + 10343355 m^2 e^2 - 5495900 m e^3 + 1099180 e^4 + 4060
l^3 + 26245 l^2 m + 56940 l m^2 + 41475 m^3 - 306580 m^2 e + 244350 m e^2 - 65160 e^3 +
435 l^2 + 1880 l m + 2045 m^2 - 6950 m e + 2780 e^2 + 30 l + 65 m - 76 e + 1
"""

C_N_B4_N3 = """
-8540 e^6z^2 - 45500l^2m^2z^4 - 109900lm^3z^4 + 280350m^2e^2z^4 - 325500me^3z^4 +
106575e^4z^4 + 13440l^2mz^5 + 44800lm^2 z^5 + 47320m^3z^5 - 235200m^2ez^5 + 174720me^2z^5
- 43680e^3z^5 - 1260l^2z^6- 7560lmz^6 - 11620m^2z^6 + 30240mez^6 - 11340e^2z^6 + 480lz^7 +
1440mz^7 - 1440ez^7 - 75z^8 + 12810e^6z + 251300l^2m^3z^2 + 195650me^4z^2 - 108220e^5z^2 -
45500l^2m^2z^3 - 109900lm^3z^3 + 280350m^2e^2z^3 - 325500me^3z^3 + 106575e^4z^3 +
630l^2z^5 + 3780lmz^5 + 5810m^2z^5 - 15120mez^5 + 5670e^2z^5 - 420lz^6 - 1260mz^6 +
1260ez^6 + 90z^7 - 4270e^6 - 201040l^2m^3z - 156520me^4z + 86576e^5z + 81900l^2m^2z^2 +
197820lm^3z^2 - 504630m^2e^2z^2 + 585900me^3z^2 - 191835e^4z^2 - 13440l^2mz^3 -
44800lm^2z^3 - 47320m^3z^3 + 235200m^2ez^3 - 174720me^2z^3 + 43680e^3z^3 + 630l^2z^4 +
3780lmz^4 + 5810m^2z^4 - 15120mez^4 + 5670e^2z^4 - 42z^6 + 50260l^2m^3 + 39130me^4 -
21644e^5 - 45500l^2m^2z - 109900lm^3z + 280350m^2e^2z - 325500me^3z + 106575e^4z +
13440l^2mz^2 + 44800lm^2z^2 + 47320m^3z^2 - 235200m^2ez^2 + 174720me^2z^2 - 43680e^3z^2 -
1260l^2z^3 - 7560lmz^3 - 11620m^2z^3 + 30240mez^3 - 11340e^2z^3 + 420lz^4 + 1260mz^4 -
1260ez^4 - 42z^5 + 9100l^2m^2 + 21980lm^3 - 56070m^2e^2 + 65100me^3 - 21315e^4 - 5760l^2mz
- 19200lm^2z - 20280m^3z + 100800m^2ez - 74880me^2z + 18720e^3z + 900l^2z^2 + 5400lmz^2 +
8300m^2z^2 - 21600mez^2 + 8100e^2z^2 - 480lz^3 - 1440mz^3 + 1440ez^3 + 90z^4 + 960l^2m +
3200lm^2 + 3380m^3 - 16800m^2e + 12480me^2 - 3120e^3 - 315l^2z - 1890lmz - 2905m^2z +
7560mez - 2835e^2z + 270lz^2 + 810mz^2 - 810ez^2 - 75z^3 + 45l^2 + 270lm + 415m^2 - 1080me
+ 405e^2 - 80lz - 240mz + 240ez + 35z^2 + 10l + 30m - 30e - 9z + 1
"""
