"""Frozen table: degree r -> smallest irreducible polynomial over GF(2).

Generated by tools/gen_irreducible.py. Do not edit; seeds depend on it.
"""

MAX_R = 1024

IRREDUCIBLE = {
    1: (1 << 1) | 0x0,
    2: (1 << 2) | 0x3,
    3: (1 << 3) | 0x3,
    4: (1 << 4) | 0x3,
    5: (1 << 5) | 0x5,
    6: (1 << 6) | 0x3,
    7: (1 << 7) | 0x3,
    8: (1 << 8) | 0x1b,
    9: (1 << 9) | 0x3,
    10: (1 << 10) | 0x9,
    11: (1 << 11) | 0x5,
    12: (1 << 12) | 0x9,
    13: (1 << 13) | 0x1b,
    14: (1 << 14) | 0x21,
    15: (1 << 15) | 0x3,
    16: (1 << 16) | 0x2b,
    17: (1 << 17) | 0x9,
    18: (1 << 18) | 0x9,
    19: (1 << 19) | 0x27,
    20: (1 << 20) | 0x9,
    21: (1 << 21) | 0x5,
    22: (1 << 22) | 0x3,
    23: (1 << 23) | 0x21,
    24: (1 << 24) | 0x1b,
    25: (1 << 25) | 0x9,
    26: (1 << 26) | 0x1b,
    27: (1 << 27) | 0x27,
    28: (1 << 28) | 0x3,
    29: (1 << 29) | 0x5,
    30: (1 << 30) | 0x3,
    31: (1 << 31) | 0x9,
    32: (1 << 32) | 0x8d,
    33: (1 << 33) | 0x4b,
    34: (1 << 34) | 0x1b,
    35: (1 << 35) | 0x5,
    36: (1 << 36) | 0x35,
    37: (1 << 37) | 0x3f,
    38: (1 << 38) | 0x63,
    39: (1 << 39) | 0x11,
    40: (1 << 40) | 0x39,
    41: (1 << 41) | 0x9,
    42: (1 << 42) | 0x27,
    43: (1 << 43) | 0x59,
    44: (1 << 44) | 0x21,
    45: (1 << 45) | 0x1b,
    46: (1 << 46) | 0x3,
    47: (1 << 47) | 0x21,
    48: (1 << 48) | 0x2d,
    49: (1 << 49) | 0x71,
    50: (1 << 50) | 0x1d,
    51: (1 << 51) | 0x4b,
    52: (1 << 52) | 0x9,
    53: (1 << 53) | 0x47,
    54: (1 << 54) | 0x7d,
    55: (1 << 55) | 0x47,
    56: (1 << 56) | 0x95,
    57: (1 << 57) | 0x11,
    58: (1 << 58) | 0x63,
    59: (1 << 59) | 0x7b,
    60: (1 << 60) | 0x3,
    61: (1 << 61) | 0x27,
    62: (1 << 62) | 0x69,
    63: (1 << 63) | 0x3,
    64: (1 << 64) | 0x1b,
    65: (1 << 65) | 0x1b,
    66: (1 << 66) | 0x9,
    67: (1 << 67) | 0x27,
    68: (1 << 68) | 0xa3,
    69: (1 << 69) | 0x65,
    70: (1 << 70) | 0x2b,
    71: (1 << 71) | 0x2b,
    72: (1 << 72) | 0x5f,
    73: (1 << 73) | 0x1d,
    74: (1 << 74) | 0x47,
    75: (1 << 75) | 0x4b,
    76: (1 << 76) | 0x35,
    77: (1 << 77) | 0x65,
    78: (1 << 78) | 0x5f,
    79: (1 << 79) | 0x1d,
    80: (1 << 80) | 0xaf,
    81: (1 << 81) | 0x11,
    82: (1 << 82) | 0xd7,
    83: (1 << 83) | 0x95,
    84: (1 << 84) | 0x21,
    85: (1 << 85) | 0x107,
    86: (1 << 86) | 0x65,
    87: (1 << 87) | 0xa3,
    88: (1 << 88) | 0x3f,
    89: (1 << 89) | 0x69,
    90: (1 << 90) | 0x2d,
    91: (1 << 91) | 0xed,
    92: (1 << 92) | 0x65,
    93: (1 << 93) | 0x5,
    94: (1 << 94) | 0x63,
    95: (1 << 95) | 0x77,
    96: (1 << 96) | 0x6f,
    97: (1 << 97) | 0x41,
    98: (1 << 98) | 0x99,
    99: (1 << 99) | 0x4b,
    100: (1 << 100) | 0x65,
    101: (1 << 101) | 0xc3,
    102: (1 << 102) | 0x69,
    103: (1 << 103) | 0xbd,
    104: (1 << 104) | 0x1b,
    105: (1 << 105) | 0x11,
    106: (1 << 106) | 0x63,
    107: (1 << 107) | 0xaf,
    108: (1 << 108) | 0x53,
    109: (1 << 109) | 0x35,
    110: (1 << 110) | 0x53,
    111: (1 << 111) | 0x95,
    112: (1 << 112) | 0x39,
    113: (1 << 113) | 0x2d,
    114: (1 << 114) | 0x2d,
    115: (1 << 115) | 0xaf,
    116: (1 << 116) | 0x17,
    117: (1 << 117) | 0x27,
    118: (1 << 118) | 0x65,
    119: (1 << 119) | 0x101,
    120: (1 << 120) | 0x1b,
    121: (1 << 121) | 0x123,
    122: (1 << 122) | 0x47,
    123: (1 << 123) | 0x5,
    124: (1 << 124) | 0x7d,
    125: (1 << 125) | 0xaf,
    126: (1 << 126) | 0x95,
    127: (1 << 127) | 0x3,
    128: (1 << 128) | 0x87,
    129: (1 << 129) | 0x21,
    130: (1 << 130) | 0x9,
    131: (1 << 131) | 0xf3,
    132: (1 << 132) | 0x77,
    133: (1 << 133) | 0x6f,
    134: (1 << 134) | 0xa3,
    135: (1 << 135) | 0x59,
    136: (1 << 136) | 0x2d,
    137: (1 << 137) | 0x13d,
    138: (1 << 138) | 0x16d,
    139: (1 << 139) | 0xaf,
    140: (1 << 140) | 0x53,
    141: (1 << 141) | 0x1ab,
    142: (1 << 142) | 0xf3,
    143: (1 << 143) | 0x2d,
    144: (1 << 144) | 0x95,
    145: (1 << 145) | 0x63,
    146: (1 << 146) | 0x2d,
    147: (1 << 147) | 0x3f,
    148: (1 << 148) | 0xa9,
    149: (1 << 149) | 0x2fb,
    150: (1 << 150) | 0x35,
    151: (1 << 151) | 0x9,
    152: (1 << 152) | 0x4d,
    153: (1 << 153) | 0x3,
    154: (1 << 154) | 0xe1,
    155: (1 << 155) | 0xb1,
    156: (1 << 156) | 0x69,
    157: (1 << 157) | 0x65,
    158: (1 << 158) | 0x137,
    159: (1 << 159) | 0x7b,
    160: (1 << 160) | 0x2d,
    161: (1 << 161) | 0x4d,
    162: (1 << 162) | 0xe7,
    163: (1 << 163) | 0xc9,
    164: (1 << 164) | 0x1ef,
    165: (1 << 165) | 0x25b,
    166: (1 << 166) | 0x63,
    167: (1 << 167) | 0x41,
    168: (1 << 168) | 0x5f,
    169: (1 << 169) | 0x161,
    170: (1 << 170) | 0x4d,
    171: (1 << 171) | 0x3f,
    172: (1 << 172) | 0x3,
    173: (1 << 173) | 0x125,
    174: (1 << 174) | 0x7d,
    175: (1 << 175) | 0x41,
    176: (1 << 176) | 0xbd,
    177: (1 << 177) | 0x2d,
    178: (1 << 178) | 0x185,
    179: (1 << 179) | 0x17,
    180: (1 << 180) | 0x9,
    181: (1 << 181) | 0xc3,
    182: (1 << 182) | 0xf3,
    183: (1 << 183) | 0x191,
    184: (1 << 184) | 0x15d,
    185: (1 << 185) | 0x10b,
    186: (1 << 186) | 0x19d,
    187: (1 << 187) | 0xe1,
    188: (1 << 188) | 0x65,
    189: (1 << 189) | 0x65,
    190: (1 << 190) | 0x1c1,
    191: (1 << 191) | 0xbb,
    192: (1 << 192) | 0x87,
    193: (1 << 193) | 0x1f7,
    194: (1 << 194) | 0x1d,
    195: (1 << 195) | 0xb7,
    196: (1 << 196) | 0x9,
    197: (1 << 197) | 0x1ef,
    198: (1 << 198) | 0x69,
    199: (1 << 199) | 0xed,
    200: (1 << 200) | 0x2d,
    201: (1 << 201) | 0x4d,
    202: (1 << 202) | 0xd1,
    203: (1 << 203) | 0x183,
    204: (1 << 204) | 0x35,
    205: (1 << 205) | 0x225,
    206: (1 << 206) | 0xaf,
    207: (1 << 207) | 0x243,
    208: (1 << 208) | 0x1cd,
    209: (1 << 209) | 0x2d,
    210: (1 << 210) | 0x81,
    211: (1 << 211) | 0x26b,
    212: (1 << 212) | 0x99,
    213: (1 << 213) | 0x65,
    214: (1 << 214) | 0x2b,
    215: (1 << 215) | 0x69,
    216: (1 << 216) | 0x8b,
    217: (1 << 217) | 0x71,
    218: (1 << 218) | 0xf5,
    219: (1 << 219) | 0xf5,
    220: (1 << 220) | 0x81,
    221: (1 << 221) | 0x137,
    222: (1 << 222) | 0x35,
    223: (1 << 223) | 0x35,
    224: (1 << 224) | 0x1b5,
    225: (1 << 225) | 0x16d,
    226: (1 << 226) | 0xf5,
    227: (1 << 227) | 0x7b,
    228: (1 << 228) | 0x107,
    229: (1 << 229) | 0x267,
    230: (1 << 230) | 0xbd,
    231: (1 << 231) | 0x95,
    232: (1 << 232) | 0xf5,
    233: (1 << 233) | 0xbd,
    234: (1 << 234) | 0x1cb,
    235: (1 << 235) | 0x1cd,
    236: (1 << 236) | 0x21,
    237: (1 << 237) | 0x93,
    238: (1 << 238) | 0x27,
    239: (1 << 239) | 0x3f,
    240: (1 << 240) | 0x129,
    241: (1 << 241) | 0x179,
    242: (1 << 242) | 0x173,
    243: (1 << 243) | 0x123,
    244: (1 << 244) | 0x167,
    245: (1 << 245) | 0x53,
    246: (1 << 246) | 0x1a7,
    247: (1 << 247) | 0x215,
    248: (1 << 248) | 0x13d,
    249: (1 << 249) | 0x93,
    250: (1 << 250) | 0x6f,
    251: (1 << 251) | 0x95,
    252: (1 << 252) | 0x7d,
    253: (1 << 253) | 0x3f,
    254: (1 << 254) | 0x87,
    255: (1 << 255) | 0x2d,
    256: (1 << 256) | 0x425,
    257: (1 << 257) | 0xbd,
    258: (1 << 258) | 0x251,
    259: (1 << 259) | 0x1fb,
    260: (1 << 260) | 0x69,
    261: (1 << 261) | 0xd1,
    262: (1 << 262) | 0x311,
    263: (1 << 263) | 0x27f,
    264: (1 << 264) | 0x245,
    265: (1 << 265) | 0x2d,
    266: (1 << 266) | 0x4d,
    267: (1 << 267) | 0x149,
    268: (1 << 268) | 0x387,
    269: (1 << 269) | 0xc3,
    270: (1 << 270) | 0x35,
    271: (1 << 271) | 0x11f,
    272: (1 << 272) | 0x1e3,
    273: (1 << 273) | 0x87,
    274: (1 << 274) | 0xed,
    275: (1 << 275) | 0x13b,
    276: (1 << 276) | 0x4b,
    277: (1 << 277) | 0xb7,
    278: (1 << 278) | 0x21,
    279: (1 << 279) | 0x21,
    280: (1 << 280) | 0x225,
    281: (1 << 281) | 0x213,
    282: (1 << 282) | 0x4d,
    283: (1 << 283) | 0x167,
    284: (1 << 284) | 0x161,
    285: (1 << 285) | 0xaf,
    286: (1 << 286) | 0x1fb,
    287: (1 << 287) | 0x65,
    288: (1 << 288) | 0x1d5,
    289: (1 << 289) | 0xf5,
    290: (1 << 290) | 0x2d,
    291: (1 << 291) | 0x7b,
    292: (1 << 292) | 0x8b,
    293: (1 << 293) | 0x25b,
    294: (1 << 294) | 0xf9,
    295: (1 << 295) | 0x35,
    296: (1 << 296) | 0x8d,
    297: (1 << 297) | 0x21,
    298: (1 << 298) | 0x13b,
    299: (1 << 299) | 0xaf,
    300: (1 << 300) | 0x21,
    301: (1 << 301) | 0x167,
    302: (1 << 302) | 0x3f,
    303: (1 << 303) | 0x3,
    304: (1 << 304) | 0x3f,
    305: (1 << 305) | 0xc5,
    306: (1 << 306) | 0x8b,
    307: (1 << 307) | 0x115,
    308: (1 << 308) | 0x387,
    309: (1 << 309) | 0x173,
    310: (1 << 310) | 0x123,
    311: (1 << 311) | 0xa9,
    312: (1 << 312) | 0x291,
    313: (1 << 313) | 0x8b,
    314: (1 << 314) | 0x167,
    315: (1 << 315) | 0x7b,
    316: (1 << 316) | 0x16b,
    317: (1 << 317) | 0x95,
    318: (1 << 318) | 0x161,
    319: (1 << 319) | 0x12f,
    320: (1 << 320) | 0x1b,
    321: (1 << 321) | 0xa5,
    322: (1 << 322) | 0x2f7,
    323: (1 << 323) | 0x7b,
    324: (1 << 324) | 0x17,
    325: (1 << 325) | 0x157,
    326: (1 << 326) | 0x40b,
    327: (1 << 327) | 0xed,
    328: (1 << 328) | 0x10b,
    329: (1 << 329) | 0x13d,
    330: (1 << 330) | 0x6f,
    331: (1 << 331) | 0xf5,
    332: (1 << 332) | 0x47,
    333: (1 << 333) | 0x5,
    334: (1 << 334) | 0x27,
    335: (1 << 335) | 0x333,
    336: (1 << 336) | 0x93,
    337: (1 << 337) | 0xe7,
    338: (1 << 338) | 0x1b,
    339: (1 << 339) | 0xaf,
    340: (1 << 340) | 0x2cb,
    341: (1 << 341) | 0x11f,
    342: (1 << 342) | 0x15d,
    343: (1 << 343) | 0x3db,
    344: (1 << 344) | 0x87,
    345: (1 << 345) | 0x115,
    346: (1 << 346) | 0xe7,
    347: (1 << 347) | 0xf5,
    348: (1 << 348) | 0x191,
    349: (1 << 349) | 0x65,
    350: (1 << 350) | 0x65,
    351: (1 << 351) | 0x149,
    352: (1 << 352) | 0xbd,
    353: (1 << 353) | 0x291,
    354: (1 << 354) | 0x32b,
    355: (1 << 355) | 0x63,
    356: (1 << 356) | 0xe7,
    357: (1 << 357) | 0x1f1,
    358: (1 << 358) | 0x16b,
    359: (1 << 359) | 0x167,
    360: (1 << 360) | 0x2d,
    361: (1 << 361) | 0x93,
    362: (1 << 362) | 0x19b,
    363: (1 << 363) | 0x129,
    364: (1 << 364) | 0x201,
    365: (1 << 365) | 0x261,
    366: (1 << 366) | 0x161,
    367: (1 << 367) | 0xbb,
    368: (1 << 368) | 0x8d,
    369: (1 << 369) | 0x5eb,
    370: (1 << 370) | 0x2d,
    371: (1 << 371) | 0x10d,
    372: (1 << 372) | 0x16d,
    373: (1 << 373) | 0x185,
    374: (1 << 374) | 0x161,
    375: (1 << 375) | 0x17,
    376: (1 << 376) | 0x1a1,
    377: (1 << 377) | 0x10b,
    378: (1 << 378) | 0x251,
    379: (1 << 379) | 0x32b,
    380: (1 << 380) | 0x563,
    381: (1 << 381) | 0x27,
    382: (1 << 382) | 0x223,
    383: (1 << 383) | 0x223,
    384: (1 << 384) | 0x1df,
    385: (1 << 385) | 0x41,
    386: (1 << 386) | 0x395,
    387: (1 << 387) | 0x183,
    388: (1 << 388) | 0x99,
    389: (1 << 389) | 0xcf,
    390: (1 << 390) | 0x13b,
    391: (1 << 391) | 0x47,
    392: (1 << 392) | 0x19b,
    393: (1 << 393) | 0x81,
    394: (1 << 394) | 0x185,
    395: (1 << 395) | 0x1f7,
    396: (1 << 396) | 0x7d,
    397: (1 << 397) | 0x1e3,
    398: (1 << 398) | 0xc5,
    399: (1 << 399) | 0x257,
    400: (1 << 400) | 0x2d,
    401: (1 << 401) | 0xbb,
    402: (1 << 402) | 0x3f,
    403: (1 << 403) | 0x321,
    404: (1 << 404) | 0x7b,
    405: (1 << 405) | 0x355,
    406: (1 << 406) | 0x10d,
    407: (1 << 407) | 0x1a7,
    408: (1 << 408) | 0x2d,
    409: (1 << 409) | 0xa9,
    410: (1 << 410) | 0x419,
    411: (1 << 411) | 0x16d,
    412: (1 << 412) | 0xa5,
    413: (1 << 413) | 0xd7,
    414: (1 << 414) | 0x13b,
    415: (1 << 415) | 0x215,
    416: (1 << 416) | 0x225,
    417: (1 << 417) | 0x13b,
    418: (1 << 418) | 0x77,
    419: (1 << 419) | 0x27f,
    420: (1 << 420) | 0x81,
    421: (1 << 421) | 0x35,
    422: (1 << 422) | 0xbb,
    423: (1 << 423) | 0x21f,
    424: (1 << 424) | 0x1ad,
    425: (1 << 425) | 0x7b,
    426: (1 << 426) | 0x273,
    427: (1 << 427) | 0x167,
    428: (1 << 428) | 0x15b,
    429: (1 << 429) | 0x23d,
    430: (1 << 430) | 0x13d,
    431: (1 << 431) | 0x2b,
    432: (1 << 432) | 0xeb,
    433: (1 << 433) | 0x36f,
    434: (1 << 434) | 0xe7,
    435: (1 << 435) | 0x46b,
    436: (1 << 436) | 0x71,
    437: (1 << 437) | 0x47,
    438: (1 << 438) | 0x19d,
    439: (1 << 439) | 0x10d,
    440: (1 << 440) | 0x1b,
    441: (1 << 441) | 0x81,
    442: (1 << 442) | 0xa5,
    443: (1 << 443) | 0x18f,
    444: (1 << 444) | 0x2bf,
    445: (1 << 445) | 0xd1,
    446: (1 << 446) | 0x6a3,
    447: (1 << 447) | 0x19d,
    448: (1 << 448) | 0xbd,
    449: (1 << 449) | 0x27f,
    450: (1 << 450) | 0x1d5,
    451: (1 << 451) | 0x335,
    452: (1 << 452) | 0x71,
    453: (1 << 453) | 0x7f1,
    454: (1 << 454) | 0x143,
    455: (1 << 455) | 0x2f1,
    456: (1 << 456) | 0xcf,
    457: (1 << 457) | 0x26d,
    458: (1 << 458) | 0x21f,
    459: (1 << 459) | 0xdb,
    460: (1 << 460) | 0x223,
    461: (1 << 461) | 0xc3,
    462: (1 << 462) | 0x261,
    463: (1 << 463) | 0x595,
    464: (1 << 464) | 0x257,
    465: (1 << 465) | 0x10d,
    466: (1 << 466) | 0x3c9,
    467: (1 << 467) | 0x843,
    468: (1 << 468) | 0x55f,
    469: (1 << 469) | 0x7d,
    470: (1 << 470) | 0x13d,
    471: (1 << 471) | 0x3,
    472: (1 << 472) | 0x3f,
    473: (1 << 473) | 0x149,
    474: (1 << 474) | 0x2b9,
    475: (1 << 475) | 0x311,
    476: (1 << 476) | 0x9f,
    477: (1 << 477) | 0x179,
    478: (1 << 478) | 0x53,
    479: (1 << 479) | 0x1fd,
    480: (1 << 480) | 0xdd,
    481: (1 << 481) | 0x297,
    482: (1 << 482) | 0x261,
    483: (1 << 483) | 0xdb,
    484: (1 << 484) | 0x5d7,
    485: (1 << 485) | 0x1ad,
    486: (1 << 486) | 0xf9,
    487: (1 << 487) | 0x215,
    488: (1 << 488) | 0x1b,
    489: (1 << 489) | 0x261,
    490: (1 << 490) | 0x2a1,
    491: (1 << 491) | 0x7b,
    492: (1 << 492) | 0x53,
    493: (1 << 493) | 0x24f,
    494: (1 << 494) | 0x53f,
    495: (1 << 495) | 0xb1,
    496: (1 << 496) | 0x197,
    497: (1 << 497) | 0x6a3,
    498: (1 << 498) | 0x77,
    499: (1 << 499) | 0x2cd,
    500: (1 << 500) | 0x167,
    501: (1 << 501) | 0x35,
    502: (1 << 502) | 0x131,
    503: (1 << 503) | 0x9,
    504: (1 << 504) | 0x5f,
    505: (1 << 505) | 0x31d,
    506: (1 << 506) | 0x317,
    507: (1 << 507) | 0xf5,
    508: (1 << 508) | 0x9f,
    509: (1 << 509) | 0x189,
    510: (1 << 510) | 0x53,
    511: (1 << 511) | 0x401,
    512: (1 << 512) | 0x125,
    513: (1 << 513) | 0x1e3,
    514: (1 << 514) | 0xa9,
    515: (1 << 515) | 0x34d,
    516: (1 << 516) | 0xa5,
    517: (1 << 517) | 0x62d,
    518: (1 << 518) | 0x1ab,
    519: (1 << 519) | 0x16b,
    520: (1 << 520) | 0x76d,
    521: (1 << 521) | 0x26b,
    522: (1 << 522) | 0x1fd,
    523: (1 << 523) | 0x237,
    524: (1 << 524) | 0x223,
    525: (1 << 525) | 0x53,
    526: (1 << 526) | 0x223,
    527: (1 << 527) | 0x283,
    528: (1 << 528) | 0x173,
    529: (1 << 529) | 0x93,
    530: (1 << 530) | 0x489,
    531: (1 << 531) | 0x431,
    532: (1 << 532) | 0x3,
    533: (1 << 533) | 0x1d,
    534: (1 << 534) | 0xa3,
    535: (1 << 535) | 0x145,
    536: (1 << 536) | 0xa9,
    537: (1 << 537) | 0x407,
    538: (1 << 538) | 0x27,
    539: (1 << 539) | 0x431,
    540: (1 << 540) | 0x201,
    541: (1 << 541) | 0x25d,
    542: (1 << 542) | 0x143,
    543: (1 << 543) | 0x5f,
    544: (1 << 544) | 0x10b,
    545: (1 << 545) | 0x1c7,
    546: (1 << 546) | 0x77,
    547: (1 << 547) | 0x1f1,
    548: (1 << 548) | 0x31b,
    549: (1 << 549) | 0x1fb,
    550: (1 << 550) | 0x19d,
    551: (1 << 551) | 0x213,
    552: (1 << 552) | 0x6f,
    553: (1 << 553) | 0x7d9,
    554: (1 << 554) | 0x581,
    555: (1 << 555) | 0x3f9,
    556: (1 << 556) | 0x4b,
    557: (1 << 557) | 0xcf,
    558: (1 << 558) | 0x4e5,
    559: (1 << 559) | 0x285,
    560: (1 << 560) | 0xf5,
    561: (1 << 561) | 0x2f1,
    562: (1 << 562) | 0x1ad,
    563: (1 << 563) | 0x1ab,
    564: (1 << 564) | 0x4b,
    565: (1 << 565) | 0x43d,
    566: (1 << 566) | 0x65,
    567: (1 << 567) | 0x653,
    568: (1 << 568) | 0x14f,
    569: (1 << 569) | 0xa17,
    570: (1 << 570) | 0xe7,
    571: (1 << 571) | 0x425,
    572: (1 << 572) | 0x327,
    573: (1 << 573) | 0x3bd,
    574: (1 << 574) | 0x3bb,
    575: (1 << 575) | 0x69,
    576: (1 << 576) | 0xa5f,
    577: (1 << 577) | 0x10d,
    578: (1 << 578) | 0x167,
    579: (1 << 579) | 0x6f3,
    580: (1 << 580) | 0x53,
    581: (1 << 581) | 0x5c5,
    582: (1 << 582) | 0x27,
    583: (1 << 583) | 0x145,
    584: (1 << 584) | 0x1ad,
    585: (1 << 585) | 0x10d,
    586: (1 << 586) | 0xa5,
    587: (1 << 587) | 0x843,
    588: (1 << 588) | 0x16d,
    589: (1 << 589) | 0x419,
    590: (1 << 590) | 0x15b,
    591: (1 << 591) | 0x251,
    592: (1 << 592) | 0x18f,
    593: (1 << 593) | 0x137,
    594: (1 << 594) | 0x55f,
    595: (1 << 595) | 0x207,
    596: (1 << 596) | 0x71,
    597: (1 << 597) | 0x3f,
    598: (1 << 598) | 0xc3,
    599: (1 << 599) | 0x77,
    600: (1 << 600) | 0xf5,
    601: (1 << 601) | 0x9f,
    602: (1 << 602) | 0x4d,
    603: (1 << 603) | 0x59,
    604: (1 << 604) | 0x2cb,
    605: (1 << 605) | 0x173,
    606: (1 << 606) | 0x2e5,
    607: (1 << 607) | 0x2cb,
    608: (1 << 608) | 0x1a7,
    609: (1 << 609) | 0x1e3,
    610: (1 << 610) | 0x24f,
    611: (1 << 611) | 0xd7,
    612: (1 << 612) | 0x31b,
    613: (1 << 613) | 0x45b,
    614: (1 << 614) | 0x87,
    615: (1 << 615) | 0xc3,
    616: (1 << 616) | 0x27f,
    617: (1 << 617) | 0x3ff,
    618: (1 << 618) | 0x761,
    619: (1 << 619) | 0x3f,
    620: (1 << 620) | 0xe1,
    621: (1 << 621) | 0x659,
    622: (1 << 622) | 0x35f,
    623: (1 << 623) | 0x467,
    624: (1 << 624) | 0x2f7,
    625: (1 << 625) | 0x25d,
    626: (1 << 626) | 0x49d,
    627: (1 << 627) | 0x7d,
    628: (1 << 628) | 0x547,
    629: (1 << 629) | 0x65,
    630: (1 << 630) | 0x95,
    631: (1 << 631) | 0x42f,
    632: (1 << 632) | 0x207,
    633: (1 << 633) | 0x87,
    634: (1 << 634) | 0xa9,
    635: (1 << 635) | 0x1f7,
    636: (1 << 636) | 0x60f,
    637: (1 << 637) | 0x1ab,
    638: (1 << 638) | 0x63,
    639: (1 << 639) | 0x1cd,
    640: (1 << 640) | 0x61b,
    641: (1 << 641) | 0x15b,
    642: (1 << 642) | 0x1fd,
    643: (1 << 643) | 0x36f,
    644: (1 << 644) | 0x369,
    645: (1 << 645) | 0x497,
    646: (1 << 646) | 0xf3,
    647: (1 << 647) | 0x21,
    648: (1 << 648) | 0x2ef,
    649: (1 << 649) | 0x823,
    650: (1 << 650) | 0x9,
    651: (1 << 651) | 0x237,
    652: (1 << 652) | 0x6f,
    653: (1 << 653) | 0x1f1,
    654: (1 << 654) | 0x137,
    655: (1 << 655) | 0x13b,
    656: (1 << 656) | 0xb1,
    657: (1 << 657) | 0x183,
    658: (1 << 658) | 0xa11,
    659: (1 << 659) | 0x28f,
    660: (1 << 660) | 0x521,
    661: (1 << 661) | 0x167,
    662: (1 << 662) | 0x1ad,
    663: (1 << 663) | 0x4e9,
    664: (1 << 664) | 0x577,
    665: (1 << 665) | 0x6eb,
    666: (1 << 666) | 0x16d,
    667: (1 << 667) | 0xd67,
    668: (1 << 668) | 0x2b5,
    669: (1 << 669) | 0x35,
    670: (1 << 670) | 0x63,
    671: (1 << 671) | 0x245,
    672: (1 << 672) | 0x6f,
    673: (1 << 673) | 0x359,
    674: (1 << 674) | 0x1b9,
    675: (1 << 675) | 0x4b,
    676: (1 << 676) | 0x491,
    677: (1 << 677) | 0x119,
    678: (1 << 678) | 0x1b9,
    679: (1 << 679) | 0x1e3,
    680: (1 << 680) | 0x3c9,
    681: (1 << 681) | 0x16d,
    682: (1 << 682) | 0x8b,
    683: (1 << 683) | 0x317,
    684: (1 << 684) | 0x34d,
    685: (1 << 685) | 0x1b,
    686: (1 << 686) | 0x571,
    687: (1 << 687) | 0x267,
    688: (1 << 688) | 0x12f,
    689: (1 << 689) | 0x149,
    690: (1 << 690) | 0x275,
    691: (1 << 691) | 0x19d,
    692: (1 << 692) | 0x635,
    693: (1 << 693) | 0x13b,
    694: (1 << 694) | 0x15d,
    695: (1 << 695) | 0x213,
    696: (1 << 696) | 0x15d,
    697: (1 << 697) | 0x2cb,
    698: (1 << 698) | 0x67b,
    699: (1 << 699) | 0x17f,
    700: (1 << 700) | 0x65,
    701: (1 << 701) | 0x395,
    702: (1 << 702) | 0x8b,
    703: (1 << 703) | 0x363,
    704: (1 << 704) | 0x10d,
    705: (1 << 705) | 0x161,
    706: (1 << 706) | 0x43b,
    707: (1 << 707) | 0x3d1,
    708: (1 << 708) | 0x35,
    709: (1 << 709) | 0x1b,
    710: (1 << 710) | 0x1c7,
    711: (1 << 711) | 0x5e1,
    712: (1 << 712) | 0x39,
    713: (1 << 713) | 0xa69,
    714: (1 << 714) | 0x86b,
    715: (1 << 715) | 0x93,
    716: (1 << 716) | 0x461,
    717: (1 << 717) | 0xae7,
    718: (1 << 718) | 0x27,
    719: (1 << 719) | 0x53f,
    720: (1 << 720) | 0x251,
    721: (1 << 721) | 0x179,
    722: (1 << 722) | 0x77,
    723: (1 << 723) | 0x38d,
    724: (1 << 724) | 0xc9f,
    725: (1 << 725) | 0x1ab,
    726: (1 << 726) | 0x21,
    727: (1 << 727) | 0x32b,
    728: (1 << 728) | 0x1d,
    729: (1 << 729) | 0x26d,
    730: (1 << 730) | 0xd51,
    731: (1 << 731) | 0x137,
    732: (1 << 732) | 0x99,
    733: (1 << 733) | 0x185,
    734: (1 << 734) | 0x843,
    735: (1 << 735) | 0x185,
    736: (1 << 736) | 0x927,
    737: (1 << 737) | 0x21,
    738: (1 << 738) | 0x2f1,
    739: (1 << 739) | 0x3a5,
    740: (1 << 740) | 0x17,
    741: (1 << 741) | 0x309,
    742: (1 << 742) | 0x77f,
    743: (1 << 743) | 0x6f3,
    744: (1 << 744) | 0x237,
    745: (1 << 745) | 0x1a1,
    746: (1 << 746) | 0xaf,
    747: (1 << 747) | 0x451,
    748: (1 << 748) | 0x4b5,
    749: (1 << 749) | 0xc3,
    750: (1 << 750) | 0x3f9,
    751: (1 << 751) | 0xf3,
    752: (1 << 752) | 0x41f,
    753: (1 << 753) | 0x2e5,
    754: (1 << 754) | 0x489,
    755: (1 << 755) | 0xdbf,
    756: (1 << 756) | 0xab1,
    757: (1 << 757) | 0xc3,
    758: (1 << 758) | 0x257,
    759: (1 << 759) | 0x20d,
    760: (1 << 760) | 0x66f,
    761: (1 << 761) | 0x9,
    762: (1 << 762) | 0x137,
    763: (1 << 763) | 0x1e3,
    764: (1 << 764) | 0x69,
    765: (1 << 765) | 0x291,
    766: (1 << 766) | 0xb7f,
    767: (1 << 767) | 0x191,
    768: (1 << 768) | 0x16c1,
    769: (1 << 769) | 0x2c1,
    770: (1 << 770) | 0xe15,
    771: (1 << 771) | 0x353,
    772: (1 << 772) | 0x81,
    773: (1 << 773) | 0x541,
    774: (1 << 774) | 0x14f,
    775: (1 << 775) | 0xd1,
    776: (1 << 776) | 0xcc9,
    777: (1 << 777) | 0x731,
    778: (1 << 778) | 0x1d5,
    779: (1 << 779) | 0x44f,
    780: (1 << 780) | 0x1df,
    781: (1 << 781) | 0x46d,
    782: (1 << 782) | 0xd7,
    783: (1 << 783) | 0x3bb,
    784: (1 << 784) | 0x43b,
    785: (1 << 785) | 0xbd,
    786: (1 << 786) | 0x569,
    787: (1 << 787) | 0xc9,
    788: (1 << 788) | 0x473,
    789: (1 << 789) | 0x27,
    790: (1 << 790) | 0xbd,
    791: (1 << 791) | 0x53,
    792: (1 << 792) | 0x273,
    793: (1 << 793) | 0x213,
    794: (1 << 794) | 0xe7,
    795: (1 << 795) | 0x93,
    796: (1 << 796) | 0x1e3,
    797: (1 << 797) | 0x555,
    798: (1 << 798) | 0xc9,
    799: (1 << 799) | 0x179,
    800: (1 << 800) | 0x283,
    801: (1 << 801) | 0x283,
    802: (1 << 802) | 0x3c9,
    803: (1 << 803) | 0x1ab,
    804: (1 << 804) | 0x681,
    805: (1 << 805) | 0xed,
    806: (1 << 806) | 0x31b,
    807: (1 << 807) | 0x81,
    808: (1 << 808) | 0x3db,
    809: (1 << 809) | 0x10b,
    810: (1 << 810) | 0x6f,
    811: (1 << 811) | 0xe7,
    812: (1 << 812) | 0xe3d,
    813: (1 << 813) | 0x1a7,
    814: (1 << 814) | 0x413,
    815: (1 << 815) | 0x3db,
    816: (1 << 816) | 0x8f1,
    817: (1 << 817) | 0x50f,
    818: (1 << 818) | 0x1e5,
    819: (1 << 819) | 0x11f,
    820: (1 << 820) | 0xed,
    821: (1 << 821) | 0x4b3,
    822: (1 << 822) | 0x1c7,
    823: (1 << 823) | 0x201,
    824: (1 << 824) | 0x3f,
    825: (1 << 825) | 0x761,
    826: (1 << 826) | 0x275,
    827: (1 << 827) | 0x7b,
    828: (1 << 828) | 0x77,
    829: (1 << 829) | 0x1b,
    830: (1 << 830) | 0x1c7,
    831: (1 << 831) | 0x2a7,
    832: (1 << 832) | 0x1cd,
    833: (1 << 833) | 0xf9,
    834: (1 << 834) | 0x4df,
    835: (1 << 835) | 0x565,
    836: (1 << 836) | 0x3dd,
    837: (1 << 837) | 0x161,
    838: (1 << 838) | 0x4c7,
    839: (1 << 839) | 0x3c9,
    840: (1 << 840) | 0x3eb,
    841: (1 << 841) | 0x71,
    842: (1 << 842) | 0x13b,
    843: (1 << 843) | 0x677,
    844: (1 << 844) | 0x3eb,
    845: (1 << 845) | 0x5,
    846: (1 << 846) | 0x69,
    847: (1 << 847) | 0x4e5,
    848: (1 << 848) | 0x137,
    849: (1 << 849) | 0x267,
    850: (1 << 850) | 0xd2f,
    851: (1 << 851) | 0x2f1,
    852: (1 << 852) | 0x131,
    853: (1 << 853) | 0x483,
    854: (1 << 854) | 0xa9,
    855: (1 << 855) | 0x497,
    856: (1 << 856) | 0x8d5,
    857: (1 << 857) | 0x69,
    858: (1 << 858) | 0x44f,
    859: (1 << 859) | 0x26b,
    860: (1 << 860) | 0x53,
    861: (1 << 861) | 0x1ab,
    862: (1 << 862) | 0xc3,
    863: (1 << 863) | 0x4d,
    864: (1 << 864) | 0x45d,
    865: (1 << 865) | 0x3,
    866: (1 << 866) | 0x4c7,
    867: (1 << 867) | 0x225,
    868: (1 << 868) | 0xa1d,
    869: (1 << 869) | 0x6dd,
    870: (1 << 870) | 0x95,
    871: (1 << 871) | 0x473,
    872: (1 << 872) | 0xf5,
    873: (1 << 873) | 0x8b,
    874: (1 << 874) | 0x47f,
    875: (1 << 875) | 0xfb1,
    876: (1 << 876) | 0x365,
    877: (1 << 877) | 0x71,
    878: (1 << 878) | 0x563,
    879: (1 << 879) | 0x229,
    880: (1 << 880) | 0xa8d,
    881: (1 << 881) | 0x921,
    882: (1 << 882) | 0x1d9,
    883: (1 << 883) | 0x347,
    884: (1 << 884) | 0x1b9,
    885: (1 << 885) | 0x183,
    886: (1 << 886) | 0x29b,
    887: (1 << 887) | 0xd1,
    888: (1 << 888) | 0x3cf,
    889: (1 << 889) | 0x3bb,
    890: (1 << 890) | 0x419,
    891: (1 << 891) | 0x16b,
    892: (1 << 892) | 0x18f,
    893: (1 << 893) | 0x137,
    894: (1 << 894) | 0x137,
    895: (1 << 895) | 0x13b,
    896: (1 << 896) | 0xa9,
    897: (1 << 897) | 0x2d5,
    898: (1 << 898) | 0x59f,
    899: (1 << 899) | 0x873,
    900: (1 << 900) | 0x3,
    901: (1 << 901) | 0x6af,
    902: (1 << 902) | 0x1c7,
    903: (1 << 903) | 0x183,
    904: (1 << 904) | 0x8f7,
    905: (1 << 905) | 0x26b,
    906: (1 << 906) | 0x61d,
    907: (1 << 907) | 0x2fb,
    908: (1 << 908) | 0x191,
    909: (1 << 909) | 0x137,
    910: (1 << 910) | 0xb91,
    911: (1 << 911) | 0x143,
    912: (1 << 912) | 0xa3,
    913: (1 << 913) | 0xbb,
    914: (1 << 914) | 0x17,
    915: (1 << 915) | 0x149,
    916: (1 << 916) | 0x635,
    917: (1 << 917) | 0xb91,
    918: (1 << 918) | 0x78f,
    919: (1 << 919) | 0x2a1,
    920: (1 << 920) | 0x8d3,
    921: (1 << 921) | 0x275,
    922: (1 << 922) | 0xe1,
    923: (1 << 923) | 0x3c3,
    924: (1 << 924) | 0xb25,
    925: (1 << 925) | 0x1bf,
    926: (1 << 926) | 0xa4b,
    927: (1 << 927) | 0x289,
    928: (1 << 928) | 0x40d,
    929: (1 << 929) | 0x819,
    930: (1 << 930) | 0x1b,
    931: (1 << 931) | 0x359,
    932: (1 << 932) | 0x207,
    933: (1 << 933) | 0x5b7,
    934: (1 << 934) | 0x13d,
    935: (1 << 935) | 0x285,
    936: (1 << 936) | 0x6c9,
    937: (1 << 937) | 0xe7,
    938: (1 << 938) | 0x175,
    939: (1 << 939) | 0xb1,
    940: (1 << 940) | 0x483,
    941: (1 << 941) | 0x843,
    942: (1 << 942) | 0x34d,
    943: (1 << 943) | 0x5cf,
    944: (1 << 944) | 0x12f,
    945: (1 << 945) | 0x1d9,
    946: (1 << 946) | 0x4d5,
    947: (1 << 947) | 0x1c7,
    948: (1 << 948) | 0x35,
    949: (1 << 949) | 0x10d,
    950: (1 << 950) | 0x1ab,
    951: (1 << 951) | 0xc3,
    952: (1 << 952) | 0x25b,
    953: (1 << 953) | 0x35f,
    954: (1 << 954) | 0x11f,
    955: (1 << 955) | 0xaf,
    956: (1 << 956) | 0x71,
    957: (1 << 957) | 0x641,
    958: (1 << 958) | 0x237,
    959: (1 << 959) | 0x10b3,
    960: (1 << 960) | 0x1b9,
    961: (1 << 961) | 0xbe9,
    962: (1 << 962) | 0x4f7,
    963: (1 << 963) | 0x5ed,
    964: (1 << 964) | 0x53,
    965: (1 << 965) | 0x473,
    966: (1 << 966) | 0x257,
    967: (1 << 967) | 0x3eb,
    968: (1 << 968) | 0x225,
    969: (1 << 969) | 0x1b9,
    970: (1 << 970) | 0x393,
    971: (1 << 971) | 0x47,
    972: (1 << 972) | 0x81,
    973: (1 << 973) | 0x59f,
    974: (1 << 974) | 0x5f,
    975: (1 << 975) | 0xe73,
    976: (1 << 976) | 0x34d,
    977: (1 << 977) | 0x4d,
    978: (1 << 978) | 0x20b,
    979: (1 << 979) | 0x143,
    980: (1 << 980) | 0x1c1,
    981: (1 << 981) | 0x15d,
    982: (1 << 982) | 0x7d,
    983: (1 << 983) | 0x419,
    984: (1 << 984) | 0x1b9,
    985: (1 << 985) | 0x115,
    986: (1 << 986) | 0x9,
    987: (1 << 987) | 0x16d,
    988: (1 << 988) | 0x107,
    989: (1 << 989) | 0xeb,
    990: (1 << 990) | 0x71f,
    991: (1 << 991) | 0x19d,
    992: (1 << 992) | 0x353,
    993: (1 << 993) | 0x503,
    994: (1 << 994) | 0x13b,
    995: (1 << 995) | 0x173,
    996: (1 << 996) | 0x267,
    997: (1 << 997) | 0xb7,
    998: (1 << 998) | 0x3dd,
    999: (1 << 999) | 0x333,
    1000: (1 << 1000) | 0x39,
    1001: (1 << 1001) | 0x2b,
    1002: (1 << 1002) | 0x2d,
    1003: (1 << 1003) | 0x173,
    1004: (1 << 1004) | 0x1f1,
    1005: (1 << 1005) | 0x3d7,
    1006: (1 << 1006) | 0x39,
    1007: (1 << 1007) | 0x10b,
    1008: (1 << 1008) | 0x10e3,
    1009: (1 << 1009) | 0x815,
    1010: (1 << 1010) | 0x17,
    1011: (1 << 1011) | 0x3f,
    1012: (1 << 1012) | 0x207,
    1013: (1 << 1013) | 0xaf,
    1014: (1 << 1014) | 0x7d,
    1015: (1 << 1015) | 0x8ad,
    1016: (1 << 1016) | 0x25d,
    1017: (1 << 1017) | 0x77,
    1018: (1 << 1018) | 0x6f5,
    1019: (1 << 1019) | 0x503,
    1020: (1 << 1020) | 0x1ab,
    1021: (1 << 1021) | 0x27,
    1022: (1 << 1022) | 0xa93,
    1023: (1 << 1023) | 0x81,
    1024: (1 << 1024) | 0x2cd,
}
