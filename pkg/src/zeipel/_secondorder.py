"""Auto-generated by scripts/derive_second_order.py.  Do not edit."""


def hbar_cos_table(e, eta, L, G, H):
    """Coefficients a[(k, m)] of sum a*cos(k*nu + m*g) for the quadratic
    cross term of the second averaging step, before the mu^6 R^4 factor."""
    x0 = G**9
    x1 = G**7
    x2 = H**2
    x3 = x1*x2
    x4 = eta**3
    x5 = x0*x4
    x6 = e**6
    x7 = x0*x6
    x8 = e**4
    x9 = x0*x8
    x10 = G**5
    x11 = H**4
    x12 = x10*x11
    x13 = e**2
    x14 = x0*x13
    x15 = x13*x3
    x16 = x3*x8
    x17 = x12*x4
    x18 = eta**2
    x19 = L**2
    x20 = x1*x19
    x21 = x18*x20
    x22 = G**8
    x23 = L*x4
    x24 = x22*x23
    x25 = 7680*x24
    x26 = L**5
    x27 = eta**8
    x28 = x26*x27
    x29 = 6912*x11
    x30 = x3*x6
    x31 = 1152*x5
    x32 = G**4
    x33 = x28*x32
    x34 = eta**11
    x35 = x26*x32
    x36 = eta**5
    x37 = x20*x36
    x38 = x35*x36
    x39 = x12*x6
    x40 = x11*x26
    x41 = x36*x40
    x42 = 5184*x41
    x43 = x3*x4
    x44 = x12*x8
    x45 = x12*x13
    x46 = x13*x21
    x47 = x21*x8
    x48 = x18*x19
    x49 = G**3
    x50 = x11*x49
    x51 = x48*x50
    x52 = 20736*x51
    x53 = x13*x24
    x54 = 10368*x13
    x55 = x11*x28
    x56 = x54*x55
    x57 = 9216*x10
    x58 = x2*x36
    x59 = x19*x58
    x60 = x11*x23*x32
    x61 = 7680*x60
    x62 = G**2
    x63 = x2*x62
    x64 = x26*x63
    x65 = 5760*x36
    x66 = x64*x65
    x67 = x21*x6
    x68 = 2304*x64
    x69 = x24*x8
    x70 = x13*x33
    x71 = 1152*x70
    x72 = x32*x6
    x73 = x26*x36
    x74 = x72*x73
    x75 = x11*x6
    x76 = x73*x75
    x77 = x13*x37
    x78 = x28*x63
    x79 = x15*x4
    x80 = 6912*x79
    x81 = x38*x8
    x82 = x19*x36*x50
    x83 = G**6
    x84 = x2*x23*x83
    x85 = 15360*x84
    x86 = x13*x38
    x87 = x2*x48
    x88 = x10*x87
    x89 = 23040*x88
    x90 = x41*x8
    x91 = x13*x41
    x92 = x13*x51
    x93 = x51*x8
    x94 = x36*x64
    x95 = x13*x94
    x96 = x8*x94
    x97 = 13824*x13
    x98 = x10*x59
    x99 = x97*x98
    x100 = x48*x49
    x101 = x100*x75
    x102 = x6*x63
    x103 = x102*x73
    x104 = x60*x8
    x105 = 2688*x84
    x106 = x13*x78
    x107 = x6*x88
    x108 = x13*x82
    x109 = x13*x84
    x110 = x8*x88
    x111 = x13*x88
    x112 = L**3
    x113 = 2304*x112
    x114 = x11*x62
    x115 = x114*x36
    x116 = x32*x58
    x117 = x112*x13
    x118 = 8064*x117
    x119 = 1152*x112
    x120 = x115*x119
    x121 = x116*x119
    x122 = -x113*x115 + x113*x116 - x115*x118 + x116*x118 - x120*x8 + x121*x8
    x123 = 1/(L**9*x34)
    x124 = x123/G**10
    x125 = (1/4096)*x124
    x126 = 231*x7
    x127 = 768*x0
    x128 = 135*x74
    x129 = 864*x77
    x130 = 2160*x86
    x131 = 2160*x81
    x132 = 3456*x84
    x133 = x112*x8
    x134 = x8*x84
    x135 = 1728*x106
    x136 = 2160*x107
    x137 = 2592*x108
    x138 = 8064*x84
    x139 = 34560*x111
    x140 = 34560*x110
    x141 = 405*x76
    x142 = 6480*x91
    x143 = 6480*x90
    x144 = 25920*x92
    x145 = 25920*x93
    x146 = 1620*x101
    x147 = x141 + x142 + x143 - x144 - x145 - x146
    x148 = 96*x5
    x149 = -384*x1*x2*x4 + x148 + 288*x17
    x150 = (1/1024)*x124
    x151 = 3240*x47
    x152 = 324*x67
    x153 = x13*x60
    x154 = 1620*x96
    x155 = 162*x103
    x156 = 144*x133
    x157 = x115*x156
    x158 = 3240*x93
    x159 = 324*x101
    x160 = x116*x156
    x161 = (1/2048)*x124
    x162 = e**3
    x163 = x0*x162
    x164 = e**5
    x165 = x0*x164
    x166 = x164*x3
    x167 = x162*x3
    x168 = x12*x162
    x169 = x12*x164
    x170 = x162*x24
    x171 = x162*x60
    x172 = x162*x84
    x173 = x164*x21
    x174 = x164*x32
    x175 = 324*x73
    x176 = x164*x63
    x177 = x176*x73
    x178 = x164*x88
    x179 = x11*x164
    x180 = x100*x179
    x181 = x175*x179 - 1296*x180
    x182 = -1296*x173 + x174*x175 - 648*x177 + 2592*x178 + x181
    x183 = e*x0
    x184 = 1296*x183
    x185 = e*x12
    x186 = 144*x162*x37
    x187 = 216*x162
    x188 = x174*x73
    x189 = 540*x188
    x190 = 1440*x162*x38
    x191 = 288*x162*x78
    x192 = 432*x162*x82
    x193 = x112*x162
    x194 = e*x84
    x195 = 8640*x178
    x196 = x162*x89
    x197 = 1620*x73
    x198 = x179*x197
    x199 = 4320*x162
    x200 = x199*x41
    x201 = x162*x51
    x202 = 17280*x201
    x203 = 6480*x180
    x204 = x198 + x200 - x202 - x203
    x205 = 1/e
    x206 = x5*x8
    x207 = 1728*x24
    x208 = x13*x5
    x209 = 1728*x208
    x210 = 90720*x15
    x211 = x33*x8
    x212 = 1728*x60
    x213 = x17*x8
    x214 = x55*x8
    x215 = x13*x17
    x216 = 3456*x98
    x217 = -69120*x111 + 3456*x17 + 17280*x95
    x218 = 576*x12
    x219 = 432*x37*x8
    x220 = x16*x4
    x221 = 1080*x74
    x222 = 1152*x84
    x223 = 1728*x38
    x224 = x13*x223
    x225 = 1728*x77
    x226 = 3456*x79
    x227 = 4320*x81
    x228 = 6912*x13*x98
    x229 = 864*x78*x8
    x230 = 1296*x8*x82
    x231 = 3456*x106
    x232 = 5184*x108
    x233 = 17280*x107
    x234 = 27648*x111
    x235 = 69120*x110
    x236 = 3240*x76
    x237 = x13*x42
    x238 = 12960*x90
    x239 = 51840*x93
    x240 = x13*x52
    x241 = 12960*x101
    x242 = x236 + x237 + x238 - x239 - x240 - x241
    x243 = 2880*x117
    x244 = -x115*x243 + x116*x243
    x245 = x150*x205
    x246 = 8100*x163
    x247 = e*x3
    x248 = 576*x24
    x249 = 2016*x193
    x250 = 576*x60
    x251 = x162*x21
    x252 = x162*x94
    x253 = 34560*x162*x88 - 6480*x173 + x174*x197 - 3240*x177 + 12960*x178 + x199*x38 + x204 - 17280*x251 - 8640*x252
    x254 = -108*x101 + 27*x76
    x255 = 72*x134 + x254 - 108*x30
    x256 = -54*x103 + 216*x107 - 108*x67 + 27*x74
    x257 = -96*x69
    x258 = -x13*x212
    x259 = 2304*x84
    x260 = -216*x1*x18*x19*x6 - 2160*x1*x18*x19*x8 + 864*x107 - 648*x11*x18*x19*x49*x6 - 6480*x11*x18*x19*x49*x8 + 8640*x110 - 216*x2*x26*x36*x6*x62 - 2160*x2*x26*x36*x62*x8 + 54*x74 + 162*x76 + 540*x81 + 1620*x90
    x261 = x127*x4
    x262 = 6912*x17
    x263 = 576*x33
    x264 = x13*x55
    x265 = 4032*x117
    x266 = x228 - x231
    x267 = x115*x265 - x116*x265 + x266 - 4608*x43
    x268 = 4032*x0
    x269 = 12096*x12
    x270 = 45360*x45
    x271 = 22680*x44
    x272 = 1728*x41
    x273 = 945*x39
    x274 = 1260*x30
    x275 = 1536*x24
    x276 = 12960*x91
    x277 = 9720*x90
    x278 = 540*x76
    x279 = 240*x69
    x280 = x100*x29
    x281 = 51840*x110
    x282 = 576*x133
    x283 = x116*x282
    x284 = x115*x282
    x285 = 2160*x101
    x286 = 12960*x96
    x287 = 38880*x93
    x288 = 51840*x92
    x289 = -x225 - x232 + 2592*x264 + 864*x70
    x290 = 1044*x69
    x291 = 5184*x117
    x292 = 960*x133
    x293 = -810*x103 + 3240*x107 + 51840*x111 + x147 + x281 - x286 - 25920*x46 - 25920*x47 - 1620*x67 + 405*x74 + 6480*x81 + 6480*x86 - 12960*x95
    x294 = 45*x164
    x295 = x123/x10
    x296 = (1/4096)*x295
    x297 = x162*x43
    x298 = -432*x1*x164*x18*x19 - 432*x164*x2*x26*x36*x62 + 1728*x178 + x181 + 108*x188
    x299 = 576*x0
    x300 = e*x4
    x301 = e*x24
    x302 = x162*x5
    x303 = 5184*x12
    x304 = -3456*e*x43
    x305 = e*x60
    x306 = x162*x33
    x307 = x162*x17
    x308 = 864*x162
    x309 = x162*x98
    x310 = -x222
    x311 = 6912*x21
    x312 = 2112*x117
    x313 = 1872*x133
    x314 = 4896*x133
    x315 = x116*x117
    x316 = -6480*x103 + 25920*x107 + 103680*x110 + 41472*x111 + x242 - 20736*x46 - 51840*x47 - x54*x94 - 12960*x67 + 3240*x74 + 12960*x81 + 5184*x86 - 25920*x96
    x317 = x125*x205
    x318 = 9*x6
    x319 = x318*x32
    x320 = x11*x318
    x321 = (1/8192)*x295
    x322 = -36*x1*x18*x19*x6 + 144*x107 - 36*x2*x26*x36*x6*x62 + x319*x73
    x323 = 96*x133
    x324 = x115*x117
    x325 = 288*x133
    x326 = (1/1024)*x295
    x327 = 432*x193
    x328 = 3744*x133
    x329 = 12*x2*x6*x62 - x320 - 3*x72
    x330 = 33*x72
    x331 = 90*x102
    x332 = 192*x134
    x333 = 81*x75
    x334 = -x159 + x333*x73
    x335 = 48*x133
    x336 = -x115*x335 + x116*x335
    x337 = x112*x308
    x338 = -x331
    return {
        (0, 0): x125*(14784*x0 - 6480*x101 - 1800*x103 - 1344*x104 + x105*x8 + 6912*x106 + 7200*x107 + 20736*x108 + 27648*x109 + 129600*x110 + 172800*x111 + 36288*x12 + x122 - x13*x31 + 55440*x14 - 151200*x15 - 75600*x16 - x17*x54 - 13824*x17 - 8448*x21 - x25 - x28*x29 - 40320*x3 - 3150*x30 - 768*x33 + 384*x34*x35 + 3456*x34*x40 - x34*x68 + 1536*x37 + 2112*x38 + 2835*x39 + x42 + 9216*x43 + 68040*x44 + 136080*x45 - 63360*x46 - 47520*x47 - 1536*x5 - x52 - 13824*x53 - x56 - x57*x59 - x60*x97 - x61 - x66 - 2640*x67 - 1344*x69 + 1155*x7 - x71 + 660*x74 + 1620*x76 + 2304*x77 + 4608*x78 + x80 + 11880*x81 + 13824*x82 + x85 + 15840*x86 + x89 + 27720*x9 + 29160*x90 + 38880*x91 - 155520*x92 - 116640*x93 - 43200*x95 - 32400*x96 - x99),
        (0, 2): x150*(6048*L*x11*x13*x32*x4 + 630*L*x11*x32*x4*x8 + 2592*L*x11*x32*x4 + 2016*L*x13*x22*x4 + 210*L*x22*x4*x8 + 864*L*x22*x4 + 336*x0*x13*x4 + 8640*x1*x13*x18*x19 + 29760*x1*x13*x2 + 540*x1*x18*x19*x6 + 8640*x1*x18*x19*x8 + 924*x1*x2*x6 + 19440*x1*x2*x8 + 3072*x1*x2 + 1008*x10*x11*x13*x4 + 3456*x10*x13*x19*x2*x36 + 2592*x11*x112*x13*x36*x62 + 480*x11*x112*x36*x62*x8 + 1296*x11*x13*x26*x27 - 2592*x116*x117 - 480*x116*x133 - 2304*x12 - x126 - x127 - x128 - x129 - x13*x138 + 8640*x13*x2*x26*x36*x62 + 432*x13*x26*x27*x32 - x130 - x131 - x132 - 840*x134 - x135 - x136 - x137 - x139 - 7440*x14 - x140 - x147 - x149 + 540*x2*x26*x36*x6*x62 + 8640*x2*x26*x36*x62*x8 - 693*x39 - 14580*x44 - 22320*x45 - 1344*x79 - 4860*x9),
        (0, 4): x161*(144*L*x13*x2*x4*x83 + 336*L*x2*x4*x8*x83 + 126*x0*x6 + 1458*x0*x8 + 360*x1*x13*x2 + 126*x10*x11*x6 + 1458*x10*x11*x8 + 648*x10*x18*x19*x2*x6 + 6480*x10*x18*x19*x2*x8 - 168*x104 + 81*x11*x26*x36*x6 + 810*x11*x26*x36*x8 - 180*x14 - x151 - x152 - 72*x153 - x154 - x155 - x157 - x158 - x159 - 2916*x16 + x160 + 81*x26*x32*x36*x6 + 810*x26*x32*x36*x8 - 252*x30 - 180*x45 - 72*x53 - 168*x69),
        (1, -4): x125*(180*x163 + 603*x165 - 1206*x166 - 360*x167 + 180*x168 + 603*x169 - 180*x170 - 180*x171 + 360*x172 + x182),
        (1, -2): x150*(3024*L*e*x11*x32*x4 + 1008*L*e*x22*x4 + 2142*L*x11*x162*x32*x4 + 714*L*x162*x22*x4 + 5184*e*x1*x2 + 54*x0*x162*x4 + 5760*x1*x162*x18*x19 + 18000*x1*x162*x2 + 2160*x1*x164*x18*x19 + 4428*x1*x164*x2 + 162*x10*x11*x162*x4 + 576*x10*x162*x19*x2*x36 + 1008*x11*x112*x162*x36*x62 + 216*x11*x162*x26*x27 - 1008*x116*x193 + 5760*x162*x2*x26*x36*x62 + 72*x162*x26*x27*x32 - 4500*x163 + 2160*x164*x2*x26*x36*x62 - 1107*x165 - 13500*x168 - 3321*x169 - 2856*x172 - x184 - 3888*x185 - x186 - x187*x43 - x189 - x190 - x191 - x192 - 4032*x194 - x195 - x196 - x204),
        (1, 0): x161*x205*(26688*L*x13*x2*x4*x83 + 12720*L*x2*x4*x8*x83 + 33264*x0*x13 + 8085*x0*x6 + 46200*x0*x8 + 2112*x0 + 2304*x1*x13*x19*x36 + 10368*x1*x13*x2*x4 + 576*x1*x19*x36*x8 + 1440*x1*x2*x4*x8 + 2304*x1*x2*x4 + 81648*x10*x11*x13 + 19845*x10*x11*x6 + 113400*x10*x11*x8 + 5184*x10*x11 + 43200*x10*x18*x19*x2*x6 + 172800*x10*x18*x19*x2*x8 - 38880*x101 - 10800*x103 - 6360*x104 + 20736*x11*x13*x19*x36*x49 + 15552*x11*x13*x26*x36 + 5184*x11*x19*x36*x49*x8 + 9720*x11*x26*x36*x6 + 38880*x11*x26*x36*x8 + 4992*x112*x13*x2*x32*x36 + 4320*x112*x2*x32*x36*x8 - 4992*x115*x117 - 4320*x115*x133 + 6912*x13*x2*x26*x27*x62 + 6336*x13*x26*x32*x36 + x132 - 13344*x153 - 126000*x16 + 1728*x2*x26*x27*x62*x8 - 240*x206 - x207 - x209 - x210 - 288*x211 - x212 - 2160*x213 - 2592*x214 - 15552*x215 - x216*x8 - x217 + 3960*x26*x32*x36*x6 + 15840*x26*x32*x36*x8 - 5760*x3 - 22050*x30 - 25344*x46 - 63360*x47 - 384*x5 - 13344*x53 - x56 - 15840*x67 - 6360*x69 - x71 - 62208*x92 - 155520*x93 - 43200*x96 - x99),
        (1, 2): x245*(7920*L*x11*x13*x32*x4 + 3708*L*x11*x32*x4*x8 + 864*L*x11*x32*x4 + 2640*L*x13*x22*x4 + 1236*L*x22*x4*x8 + 288*L*x22*x4 + 864*x0*x13*x4 + 156*x0*x4*x8 - 192*x0 + 6912*x1*x13*x18*x19 + 29376*x1*x13*x2 + 4320*x1*x18*x19*x6 + 17280*x1*x18*x19*x8 + 8340*x1*x2*x6 + 45600*x1*x2*x8 + 768*x1*x2 + 2592*x10*x11*x13*x4 + 468*x10*x11*x4*x8 + 1728*x10*x19*x2*x36*x8 - 10560*x109 + 2448*x11*x112*x36*x62*x8 + 2592*x11*x13*x26*x27 + 648*x11*x26*x27*x8 - 2448*x116*x133 + 6912*x13*x2*x26*x36*x62 + 864*x13*x26*x27*x32 - 4944*x134 - 7344*x14 - x149 + 4320*x2*x26*x36*x6*x62 + 17280*x2*x26*x36*x62*x8 - x218 - x219 - 624*x220 - x221 - x222 - x224 - x225 - x226 - x227 + x228 - x229 - x230 - x231 - x232 - x233 - x234 - x235 - x242 - x244 + 216*x26*x27*x32*x8 - 6255*x39 - 34200*x44 - 22032*x45 - 2085*x7 - 11400*x9),
        (1, 4): x125*(-e*x222 + e*x248 + e*x250 - x115*x249 + x116*x249 + 2673*x165 - 5346*x166 - 16200*x167 + 8100*x168 + 2673*x169 - 2388*x170 - 2388*x171 + 4776*x172 - x184 - 1296*x185 + x246 + 2592*x247 + x253),
        (2, -4): x125*(-36*x104 - 324*x16 + x255 + x256 + 54*x39 + 162*x44 - 36*x69 + 54*x7 + 162*x9),
        (2, -2): x150*(288*L*x11*x32*x4*x8 + 576*L*x13*x22*x4 + 24*x0*x13*x4 + 4800*x1*x13*x2 + 420*x1*x2*x6 + 6480*x1*x2*x8 + 72*x10*x11*x13*x4 - x13*x259 - 384*x134 - 1200*x14 + x157 - x160 - x257 - x258 - x260 - 315*x39 - 4860*x44 - 3600*x45 - 105*x7 - 96*x79 - 1620*x9),
        (2, 0): x161*(20736*L*x13*x2*x4*x83 + 2112*L*x2*x4*x8*x83 + 10752*L*x2*x4*x83 + 36960*x0*x13 + 924*x0*x6 + 20790*x0*x8 + 7392*x0 + 1152*x1*x13*x19*x36 + 4608*x1*x13*x2*x4 + 90720*x10*x11*x13 + 2268*x10*x11*x6 + 51030*x10*x11*x8 + 18144*x10*x11 + 86400*x10*x13*x18*x19*x2 + 5400*x10*x18*x19*x2*x6 + 86400*x10*x18*x19*x2*x8 - 4860*x101 - 1350*x103 - 1056*x104 + 10368*x11*x13*x19*x36*x49 + 19440*x11*x13*x26*x36 + 1215*x11*x26*x36*x6 + 19440*x11*x26*x36*x8 + 768*x112*x2*x32*x36*x8 - 768*x115*x133 + 7920*x13*x26*x32*x36 - x13*x261 - x13*x262 - x13*x263 - 100800*x15 - 56700*x16 - 5376*x24 + 495*x26*x32*x36*x6 + 7920*x26*x32*x36*x8 - x261 - x262 - 5184*x264 - x267 - 20160*x3 - 2520*x30 - 31680*x46 - 31680*x47 - 10368*x53 - x54*x60 - 5376*x60 - 1980*x67 - 1056*x69 - 77760*x92 - 77760*x93 - 21600*x95 - 21600*x96),
        (2, 2): x150*(720*x103 + 720*x104 - 2880*x107 + x120 - x121 - 960*x134 - 15120*x14 + 60480*x15 + 7776*x153 + 30240*x16 + 864*x208 + 2304*x21 + 2592*x215 + x217 - x226 + x263 + x267 - x268 - x269 - x270 - x271 - x272 - x273 + x274 + x275 - x276 - x277 - x278 + x279 + x280 - x281 - x283 + x284 + x285 + x286 + x287 + x288 + x289 + 16128*x3 + x31 + x36*x68 - 1152*x37 - 576*x38 + 17280*x46 + 12960*x47 + 2592*x53 - x54*x84 + 1728*x55 - x57*x87 + 4608*x60 + 720*x67 - 315*x7 - 180*x74 - 2304*x78 - 3240*x81 - 3456*x82 - 6144*x84 - 4320*x86 - 7560*x9 + 4608*x98),
        (2, 4): x125*(-1440*x0 - 1044*x104 + 14400*x109 - x115*x291 - x115*x292 + x116*x291 + x116*x292 - 1440*x12 + 2088*x134 + 14400*x14 - 28800*x15 - 7200*x153 - 24300*x16 + 1152*x24 - x259 - x274 - x290 + x293 + 2880*x3 + 630*x39 + 12150*x44 + 14400*x45 - 7200*x53 + 1152*x60 + 630*x7 + 12150*x9),
        (3, -4): x296*(x11*x294 - 90*x176 + x294*x32),
        (3, -2): x150*(486*L*x11*x162*x32*x4 + 162*L*x162*x22*x4 + 6*x0*x162*x4 + 2640*x1*x162*x2 + 1284*x1*x164*x2 + 18*x10*x11*x162*x4 - 660*x163 - 321*x165 - 1980*x168 - 963*x169 - 648*x172 - 24*x297 - x298),
        (3, 0): x161*(12480*L*e*x2*x4*x83 + 7320*L*x162*x2*x4*x83 + 11088*e*x0 + 27216*e*x10*x11 + 23100*x0*x162 + 4851*x0*x164 + 192*x1*x162*x19*x36 + 720*x1*x162*x2*x4 + 56700*x10*x11*x162 + 11907*x10*x11*x164 + 57600*x10*x162*x18*x19*x2 + 21600*x10*x164*x18*x19*x2 + 1728*x11*x162*x19*x36*x49 + 12960*x11*x162*x26*x36 + 4860*x11*x164*x26*x36 + 1440*x112*x162*x2*x32*x36 - 1440*x115*x193 + 576*x162*x2*x26*x27*x62 + 5280*x162*x26*x32*x36 + 1980*x164*x26*x32*x36 - 13230*x166 - 63000*x167 - 3660*x170 - 3660*x171 - 7920*x173 - 5400*x177 - 19440*x180 - 51840*x201 - 30240*x247 - 21120*x251 - 14400*x252 - x299*x300 - x300*x303 - 6240*x301 - 120*x302 - x304 - 6240*x305 - 96*x306 - 1080*x307 - x308*x55 - 1152*x309),
        (3, 2): x245*(-960*x0 + 4320*x103 + 3132*x104 - 9024*x109 + x115*x312 + x115*x313 - x116*x312 - x116*x313 - 2880*x12 + x13*x303*x4 + x13*x311 - 4176*x134 - 10800*x14 + 43200*x15 + 6768*x153 + 55200*x16 + 2016*x17 + 204*x206 + x209 + 216*x211 + 612*x213 + 648*x214 - x219 - 816*x220 - x221 - x224 - x227 - x229 - x230 - x233 - x234 - x235 - x236 - x237 - x238 + x239 + 288*x24 + x240 + x241 + x266 + x289 + x290 + 3840*x3 + 9300*x30 + x310 - 6975*x39 - 2688*x43 - 41400*x44 - 32400*x45 + 17280*x47 + 672*x5 + 2256*x53 + 864*x60 + 4320*x67 - 2325*x7 + 1728*x8*x98 - x80 - 13800*x9 + 6912*x95 + 17280*x96),
        (3, 4): x317*(-6792*x104 + 23808*x109 - x114*x117*x65 - x115*x314 + x116*x314 + 13584*x134 + 16848*x14 - 33696*x15 - 11904*x153 - 61200*x16 - x218 + x248 + x250 - x299 + 1152*x3 - 11790*x30 + x310 + 5760*x315 + x316 + 5895*x39 + 30600*x44 + 16848*x45 - 11904*x53 - 6792*x69 + 5895*x7 + 30600*x9),
        (4, -4): x321*(-18*x102 + x319 + x320),
        (4, -2): x150*(54*L*x11*x32*x4*x8 + 18*L*x22*x4*x8 + 864*x1*x2*x8 - x255 - x322 - 81*x39 - 648*x44 - 27*x7 - 216*x9),
        (4, 0): x150*(-972*x101 - 270*x103 - 240*x104 + 1080*x107 + 10800*x110 - x115*x323 + x116*x323 + x126 + x13*x132 - x13*x148 - x13*x207 + 480*x134 + 4620*x14 - 12600*x15 - 11340*x16 - 864*x215 + x258 - x279 - 630*x30 + 567*x39 + 10206*x44 + 11340*x45 - 3960*x47 - 396*x67 + 99*x74 + 243*x76 + 576*x79 + 990*x81 + 4158*x9 + 2430*x90 - 9720*x93 - 2700*x96),
        (4, 2): x150*(-3264*x0 + 540*x103 + 450*x104 - x105 - 5760*x109 + x115*x325 - x116*x325 - 9792*x12 - x128 - x129 + x13*x216 - x130 - x131 - 600*x134 - x135 - x136 - x137 - x139 - 12720*x14 - x140 - x141 - x142 - x143 + x144 + x145 + x146 + 50880*x15 + 4320*x153 + 25920*x16 + 3744*x17 + 816*x208 + 2448*x215 + 672*x24 + 1296*x264 + 13056*x3 + 1092*x30 - 1440*x315 + 1440*x324 - 819*x39 - 4992*x43 - 19440*x44 - 38160*x45 + 8640*x46 + 8640*x47 + 1248*x5 + 1440*x53 + 2016*x60 + 540*x67 + 150*x69 - 273*x7 + 432*x70 - 3264*x79 - 6480*x9 + 8640*x95 + 8640*x96),
        (4, 4): x125*(12096*x0 - 1080*x103 - 1536*x104 + 4320*x107 + 34560*x109 + 77760*x110 + 103680*x111 + x122 + 3072*x134 + 45360*x14 - 17280*x153 - 45360*x16 - x210 + x223 - 10752*x24 + x269 + x270 + x271 + x272 + x273 - x275*x8 + x276 + x277 + x278 - x280 - x285 - x287 - x288 - 24192*x3 - 1890*x30 - x311 - 51840*x46 - 38880*x47 - 17280*x53 - 10752*x60 - 2160*x67 + 945*x7 + 540*x74 + 9720*x81 + 21504*x84 + 12960*x86 + 13824*x88 + 22680*x9 - 3456*x94 - 25920*x95 - 19440*x96),
        (5, -2): x326*(156*x164*x2*x62 - 39*x174 - 117*x179),
        (5, 0): x161*(4620*x163 + 1617*x165 - 4410*x166 - 12600*x167 + 11340*x168 + 3969*x169 - x17*x187 - 924*x170 - 924*x171 + 1848*x172 - 1584*x173 - 1080*x177 + 4320*x178 + 972*x179*x73 - 3888*x180 + 396*x188 + 144*x297 - 24*x302),
        (5, 2): x150*(2592*e*x17 + 864*e*x5 + x115*x327 - x116*x327 + x162*x66 - 1539*x165 + 6156*x166 + 32400*x167 - 24300*x168 - 4617*x169 + 426*x170 + 1278*x171 - 1704*x172 + 2160*x173 + 2160*x177 - 4752*x183 - 14256*x185 - x186 + x187*x55 - x189 - x190 - x191 - x192 - 2496*x194 - x195 - x196 - x198 - x200 + x202 + x203 - x246 + 19008*x247 + 5760*x251 - 504*x297 + 624*x301 + 126*x302 + x304 + 1872*x305 + 72*x306 + 378*x307 + 576*x309),
        (5, 4): x317*(-7848*x104 + 40320*x109 - x115*x328 + x116*x328 + 4032*x12 + 15696*x134 + x138 + 37584*x14 - 75168*x15 - 20160*x153 - 90000*x16 - 4032*x24 + x268 - 8064*x3 - 14670*x30 + 4224*x315 + x316 - 4224*x324 + 7335*x39 + 45000*x44 + 37584*x45 - 20160*x53 - 4032*x60 - 7848*x69 + 7335*x7 + 45000*x9),
        (6, -2): x326*x329,
        (6, 0): x161*(-96*x104 + 360*x107 - 3780*x16 + x257 - 360*x30 + x330*x73 - x331*x73 + x332 + x334 + 324*x39 + 3402*x44 - 132*x67 + 132*x7 + 1386*x9),
        (6, 2): x150*(864*L*x11*x13*x32*x4 + 144*L*x11*x32*x4*x8 + 288*L*x13*x22*x4 + 48*L*x22*x4*x8 + 264*x0*x13*x4 + 15360*x1*x13*x2 + 588*x1*x2*x6 + 11664*x1*x2*x8 + 792*x10*x11*x13*x4 - x13*x222 - 3840*x14 - x260 - x332 - x336 - 441*x39 - 8748*x44 - 11520*x45 - 147*x7 - 1056*x79 - 2916*x9),
        (6, 4): x125*(13536*x0 - 1164*x104 + 27072*x109 + 13536*x12 + 2328*x134 + 46080*x14 - 92160*x15 - 13536*x153 - 43740*x16 - 8832*x24 + x244 + x283 - x284 + x293 - 27072*x3 - 1764*x30 + 882*x39 + 21870*x44 + 46080*x45 - 13536*x53 - 8832*x60 - 1164*x69 + 882*x7 + 17664*x84 + 21870*x9),
        (7, 0): (1/2048)*x295*(231*x174 - 630*x176 + 567*x179),
        (7, 2): x150*(198*L*x11*x162*x32*x4 + 66*L*x162*x22*x4 + 30*x0*x162*x4 + 7440*x1*x162*x2 + 2244*x1*x164*x2 + 90*x10*x11*x162*x4 - 1860*x163 - 561*x165 - 5580*x168 - 1683*x169 - 264*x172 - 120*x297 - x298),
        (7, 4): x125*(-e*x25 - e*x61 + e*x85 - x115*x337 + x116*x337 + 29700*x163 + 5265*x165 - 10530*x166 - 59400*x167 + 29700*x168 + 5265*x169 - 3972*x170 - 3972*x171 + 7944*x172 + 19440*x183 + 19440*x185 - 38880*x247 + x253),
        (8, 0): x296*(x330 + x333 + x338),
        (8, 2): x150*(18*L*x11*x32*x4*x8 + 6*L*x22*x4*x8 + 180*x1*x2*x6 + 2160*x1*x2*x8 - 24*x134 - x254 - x322 - 135*x39 - 1620*x44 - 45*x7 - 540*x9),
        (8, 4): x161*(-216*x104 + 648*x107 + 3312*x109 + 6480*x110 + 432*x134 + 7740*x14 - 15480*x15 - x151 - x152 - 1656*x153 - x154 - x155 - x158 - 10692*x16 - 504*x30 + x334 + x336 + 252*x39 + 5346*x44 + 7740*x45 - 1656*x53 - 216*x69 + 252*x7 + 81*x74 + 810*x81 + 5346*x9 + 810*x90),
        (9, 2): x326*(348*x164*x2*x62 - 87*x174 - 261*x179),
        (9, 4): x125*(7380*x163 + 2043*x165 - 4086*x166 - 14760*x167 + 7380*x168 + 2043*x169 - 708*x170 - 708*x171 + 1416*x172 + x182),
        (10, 2): (1/512)*x295*x329,
        (10, 4): x125*(-60*x104 + 120*x134 - 4212*x16 + x254 + x256 - 324*x30 + 162*x39 + 2106*x44 - 60*x69 + 162*x7 + 2106*x9),
        (11, 4): x296*(333*x174 - 666*x176 + 333*x179),
        (12, 4): x321*(x338 + 45*x72 + 45*x75),
    }


def long_period_cos2(L, G, H):
    """Coefficient c2 of the l-averaged zero-mean remainder c2*cos(2g),
    before the mu^6 R^4 factor.  The cos(4g) harmonic cancels identically
    on eta = G/L; that is asserted during generation."""
    return (1/64)*(-3*G**6 + 48*G**4*H**2 + 3*G**4*L**2 - 45*G**2*H**4 - 48*G**2*H**2*L**2 + 45*H**4*L**2)/(G**11*L**5)
