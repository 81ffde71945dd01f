// Canned hand-frame bursts per action gesture (generated from the
// synthetic pose generator; 0.7 s at 30 Hz, palm at a neutral hover).
// Timestamps are relative; the sender rebases them onto the session clock.

export interface FrameRecord {
  t: number;
  visible: boolean;
  palm_position: number[];
  palm_direction: number[];
  palm_normal: number[];
  z_rotation: number;
  fingers: number[][][][];
  fingertips: number[][];
}

export const CANNED_BURSTS: Record<string, FrameRecord[]> = {"grab":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2783,0.0592,0.4386]],[[0.2783,0.0592,0.4386],[0.3081,0.0588,0.4182]],[[0.3081,0.0588,0.4182],[0.3256,0.0567,0.4031]],[[0.3256,0.0567,0.4031],[0.3426,0.0534,0.3908]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.3331,0.0286,0.4216]],[[0.3331,0.0286,0.4216],[0.3326,0.0279,0.3977]],[[0.3326,0.0279,0.3977],[0.3224,0.0271,0.3834]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.3341,0.0077,0.419]],[[0.3341,0.0077,0.419],[0.333,0.0074,0.3923]],[[0.333,0.0074,0.3923],[0.3228,0.0066,0.3764]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3273,-0.0125,0.4222]],[[0.3273,-0.0125,0.4222],[0.3271,-0.0135,0.3973]],[[0.3271,-0.0135,0.3973],[0.3163,-0.0133,0.3826]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3177,-0.0338,0.4286]],[[0.3177,-0.0338,0.4286],[0.3169,-0.0332,0.4097]],[[0.3169,-0.0332,0.4097],[0.3077,-0.0326,0.3971]]]],"fingertips":[[0.3426,0.0534,0.3908],[0.3224,0.0271,0.3834],[0.3228,0.0066,0.3764],[0.3163,-0.0133,0.3826],[0.3077,-0.0326,0.3971]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.2787,0.0602,0.4393]],[[0.2787,0.0602,0.4393],[0.3066,0.0606,0.4192]],[[0.3066,0.0606,0.4192],[0.3271,0.0567,0.4035]],[[0.3271,0.0567,0.4035],[0.342,0.056,0.3918]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3335,0.03,0.4225]],[[0.3335,0.03,0.4225],[0.3324,0.0298,0.3992]],[[0.3324,0.0298,0.3992],[0.3224,0.0288,0.3847]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3346,0.0085,0.4194]],[[0.3346,0.0085,0.4194],[0.3332,0.0085,0.3926]],[[0.3332,0.0085,0.3926],[0.3216,0.009,0.3779]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3268,-0.0114,0.4229]],[[0.3268,-0.0114,0.4229],[0.3264,-0.0105,0.398]],[[0.3264,-0.0105,0.398],[0.316,-0.0107,0.3827]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3167,-0.033,0.429]],[[0.3167,-0.033,0.429],[0.3167,-0.0315,0.4103]],[[0.3167,-0.0315,0.4103],[0.3069,-0.0316,0.3981]]]],"fingertips":[[0.342,0.056,0.3918],[0.3224,0.0288,0.3847],[0.3216,0.009,0.3779],[0.316,-0.0107,0.3827],[0.3069,-0.0316,0.3981]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.278,0.0592,0.4385]],[[0.278,0.0592,0.4385],[0.3068,0.0594,0.4173]],[[0.3068,0.0594,0.4173],[0.3262,0.0569,0.403]],[[0.3262,0.0569,0.403],[0.3417,0.0541,0.3904]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3337,0.0286,0.4213]],[[0.3337,0.0286,0.4213],[0.3328,0.0286,0.3978]],[[0.3328,0.0286,0.3978],[0.322,0.0279,0.3827]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3324,0.008,0.4191]],[[0.3324,0.008,0.4191],[0.332,0.0079,0.3923]],[[0.332,0.0079,0.3923],[0.3218,0.0079,0.3769]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.326,-0.0128,0.4219]],[[0.326,-0.0128,0.4219],[0.3268,-0.0118,0.3964]],[[0.3268,-0.0118,0.3964],[0.3157,-0.012,0.3821]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.316,-0.0337,0.4285]],[[0.316,-0.0337,0.4285],[0.3173,-0.0332,0.4096]],[[0.3173,-0.0332,0.4096],[0.307,-0.0333,0.3962]]]],"fingertips":[[0.3417,0.0541,0.3904],[0.322,0.0279,0.3827],[0.3218,0.0079,0.3769],[0.3157,-0.012,0.3821],[0.307,-0.0333,0.3962]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2782,0.061,0.4386]],[[0.2782,0.061,0.4386],[0.3072,0.06,0.4182]],[[0.3072,0.06,0.4182],[0.3262,0.0565,0.4035]],[[0.3262,0.0565,0.4035],[0.3423,0.0547,0.3906]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3332,0.0291,0.4214]],[[0.3332,0.0291,0.4214],[0.3333,0.0293,0.3974]],[[0.3333,0.0293,0.3974],[0.3224,0.0284,0.3824]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3328,0.0086,0.4192]],[[0.3328,0.0086,0.4192],[0.3327,0.0082,0.3916]],[[0.3327,0.0082,0.3916],[0.321,0.0087,0.3769]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.3252,-0.0114,0.4217]],[[0.3252,-0.0114,0.4217],[0.3249,-0.0122,0.3968]],[[0.3249,-0.0122,0.3968],[0.3152,-0.0122,0.3826]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.3159,-0.0328,0.4283]],[[0.3159,-0.0328,0.4283],[0.3171,-0.0333,0.4094]],[[0.3171,-0.0333,0.4094],[0.3083,-0.0325,0.396]]]],"fingertips":[[0.3423,0.0547,0.3906],[0.3224,0.0284,0.3824],[0.321,0.0087,0.3769],[0.3152,-0.0122,0.3826],[0.3083,-0.0325,0.396]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2778,0.0599,0.4384]],[[0.2778,0.0599,0.4384],[0.307,0.0607,0.4175]],[[0.307,0.0607,0.4175],[0.3263,0.057,0.4023]],[[0.3263,0.057,0.4023],[0.3417,0.0551,0.3904]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3329,0.0279,0.4217]],[[0.3329,0.0279,0.4217],[0.3332,0.0292,0.3977]],[[0.3332,0.0292,0.3977],[0.3225,0.029,0.3814]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.332,0.0085,0.4183]],[[0.332,0.0085,0.4183],[0.3332,0.0081,0.3914]],[[0.3332,0.0081,0.3914],[0.3208,0.0084,0.3757]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3265,-0.0121,0.4209]],[[0.3265,-0.0121,0.4209],[0.3268,-0.0119,0.3967]],[[0.3268,-0.0119,0.3967],[0.3155,-0.0117,0.3812]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3175,-0.034,0.4278]],[[0.3175,-0.034,0.4278],[0.3162,-0.0326,0.4083]],[[0.3162,-0.0326,0.4083],[0.3073,-0.0312,0.3958]]]],"fingertips":[[0.3417,0.0551,0.3904],[0.3225,0.029,0.3814],[0.3208,0.0084,0.3757],[0.3155,-0.0117,0.3812],[0.3073,-0.0312,0.3958]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.277,0.0604,0.4389]],[[0.277,0.0604,0.4389],[0.3068,0.0607,0.4175]],[[0.3068,0.0607,0.4175],[0.325,0.057,0.4024]],[[0.325,0.057,0.4024],[0.3412,0.0548,0.3896]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3323,0.0288,0.4217]],[[0.3323,0.0288,0.4217],[0.3331,0.0289,0.3982]],[[0.3331,0.0289,0.3982],[0.3211,0.0289,0.3827]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.3321,0.009,0.4176]],[[0.3321,0.009,0.4176],[0.3317,0.0086,0.392]],[[0.3317,0.0086,0.392],[0.3214,0.0083,0.3757]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3253,-0.0113,0.4204]],[[0.3253,-0.0113,0.4204],[0.3251,-0.0121,0.3975]],[[0.3251,-0.0121,0.3975],[0.3149,-0.011,0.3817]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3151,-0.032,0.4284]],[[0.3151,-0.032,0.4284],[0.3157,-0.0325,0.4091]],[[0.3157,-0.0325,0.4091],[0.3055,-0.0316,0.3963]]]],"fingertips":[[0.3412,0.0548,0.3896],[0.3211,0.0289,0.3827],[0.3214,0.0083,0.3757],[0.3149,-0.011,0.3817],[0.3055,-0.0316,0.3963]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.2765,0.0599,0.4382]],[[0.2765,0.0599,0.4382],[0.3059,0.0597,0.4176]],[[0.3059,0.0597,0.4176],[0.3247,0.0556,0.4034]],[[0.3247,0.0556,0.4034],[0.3409,0.0537,0.3907]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3326,0.0291,0.4217]],[[0.3326,0.0291,0.4217],[0.3324,0.0286,0.3976]],[[0.3324,0.0286,0.3976],[0.3215,0.0282,0.3835]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3327,0.0081,0.4192]],[[0.3327,0.0081,0.4192],[0.331,0.0072,0.3915]],[[0.331,0.0072,0.3915],[0.3201,0.0081,0.3765]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3254,-0.0122,0.4222]],[[0.3254,-0.0122,0.4222],[0.3242,-0.0127,0.3967]],[[0.3242,-0.0127,0.3967],[0.3136,-0.0123,0.3826]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.3159,-0.0328,0.4278]],[[0.3159,-0.0328,0.4278],[0.3152,-0.0334,0.4093]],[[0.3152,-0.0334,0.4093],[0.3063,-0.0325,0.3964]]]],"fingertips":[[0.3409,0.0537,0.3907],[0.3215,0.0282,0.3835],[0.3201,0.0081,0.3765],[0.3136,-0.0123,0.3826],[0.3063,-0.0325,0.3964]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.278,0.0621,0.4381]],[[0.278,0.0621,0.4381],[0.3077,0.0608,0.4166]],[[0.3077,0.0608,0.4166],[0.3257,0.0573,0.4029]],[[0.3257,0.0573,0.4029],[0.3409,0.0561,0.3906]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3333,0.0295,0.4215]],[[0.3333,0.0295,0.4215],[0.332,0.029,0.3975]],[[0.332,0.029,0.3975],[0.3234,0.0294,0.3831]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3333,0.0084,0.4192]],[[0.3333,0.0084,0.4192],[0.3337,0.0087,0.3923]],[[0.3337,0.0087,0.3923],[0.3216,0.0091,0.3768]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3254,-0.0103,0.4208]],[[0.3254,-0.0103,0.4208],[0.326,-0.0114,0.3962]],[[0.326,-0.0114,0.3962],[0.3147,-0.0097,0.3812]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.317,-0.0316,0.4275]],[[0.317,-0.0316,0.4275],[0.3166,-0.032,0.4089]],[[0.3166,-0.032,0.4089],[0.307,-0.0313,0.3957]]]],"fingertips":[[0.3409,0.0561,0.3906],[0.3234,0.0294,0.3831],[0.3216,0.0091,0.3768],[0.3147,-0.0097,0.3812],[0.307,-0.0313,0.3957]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2792,0.0608,0.4391]],[[0.2792,0.0608,0.4391],[0.3071,0.0588,0.4163]],[[0.3071,0.0588,0.4163],[0.3265,0.0573,0.4021]],[[0.3265,0.0573,0.4021],[0.3422,0.054,0.3911]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.3327,0.03,0.4216]],[[0.3327,0.03,0.4216],[0.3328,0.0292,0.3977]],[[0.3328,0.0292,0.3977],[0.3215,0.029,0.3828]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.3341,0.0084,0.4183]],[[0.3341,0.0084,0.4183],[0.3329,0.0081,0.3916]],[[0.3329,0.0081,0.3916],[0.3225,0.0087,0.3764]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3276,-0.0113,0.4215]],[[0.3276,-0.0113,0.4215],[0.3271,-0.0115,0.396]],[[0.3271,-0.0115,0.396],[0.3158,-0.0116,0.3818]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3165,-0.0328,0.429]],[[0.3165,-0.0328,0.429],[0.3163,-0.0317,0.4096]],[[0.3163,-0.0317,0.4096],[0.3071,-0.0323,0.3963]]]],"fingertips":[[0.3422,0.054,0.3911],[0.3215,0.029,0.3828],[0.3225,0.0087,0.3764],[0.3158,-0.0116,0.3818],[0.3071,-0.0323,0.3963]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2778,0.06,0.4391]],[[0.2778,0.06,0.4391],[0.3063,0.0586,0.4175]],[[0.3063,0.0586,0.4175],[0.3259,0.0554,0.4022]],[[0.3259,0.0554,0.4022],[0.3421,0.0528,0.3905]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.3331,0.0286,0.4217]],[[0.3331,0.0286,0.4217],[0.3331,0.0279,0.3975]],[[0.3331,0.0279,0.3975],[0.3225,0.0266,0.3839]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3325,0.007,0.4194]],[[0.3325,0.007,0.4194],[0.3324,0.0076,0.3913]],[[0.3324,0.0076,0.3913],[0.3213,0.0072,0.3765]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3257,-0.0129,0.4213]],[[0.3257,-0.0129,0.4213],[0.325,-0.0118,0.3963]],[[0.325,-0.0118,0.3963],[0.3148,-0.012,0.3827]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.3168,-0.0334,0.4274]],[[0.3168,-0.0334,0.4274],[0.3164,-0.0347,0.4102]],[[0.3164,-0.0347,0.4102],[0.3081,-0.0327,0.3961]]]],"fingertips":[[0.3421,0.0528,0.3905],[0.3225,0.0266,0.3839],[0.3213,0.0072,0.3765],[0.3148,-0.012,0.3827],[0.3081,-0.0327,0.3961]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2773,0.0596,0.4395]],[[0.2773,0.0596,0.4395],[0.3064,0.0601,0.4177]],[[0.3064,0.0601,0.4177],[0.3238,0.0564,0.4045]],[[0.3238,0.0564,0.4045],[0.3411,0.0542,0.3917]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.332,0.0292,0.4227]],[[0.332,0.0292,0.4227],[0.3325,0.0294,0.3985]],[[0.3325,0.0294,0.3985],[0.3229,0.0287,0.3842]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3326,0.008,0.4188]],[[0.3326,0.008,0.4188],[0.3326,0.0078,0.3915]],[[0.3326,0.0078,0.3915],[0.3208,0.0071,0.3765]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.3263,-0.0116,0.4224]],[[0.3263,-0.0116,0.4224],[0.3253,-0.0121,0.3978]],[[0.3253,-0.0121,0.3978],[0.3143,-0.0114,0.3826]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3163,-0.0328,0.4289]],[[0.3163,-0.0328,0.4289],[0.3163,-0.0337,0.4097]],[[0.3163,-0.0337,0.4097],[0.3058,-0.032,0.3961]]]],"fingertips":[[0.3411,0.0542,0.3917],[0.3229,0.0287,0.3842],[0.3208,0.0071,0.3765],[0.3143,-0.0114,0.3826],[0.3058,-0.032,0.3961]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2771,0.0603,0.4386]],[[0.2771,0.0603,0.4386],[0.3058,0.0603,0.4173]],[[0.3058,0.0603,0.4173],[0.3256,0.0564,0.403]],[[0.3256,0.0564,0.403],[0.3409,0.0536,0.3896]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3332,0.0282,0.421]],[[0.3332,0.0282,0.421],[0.3314,0.0288,0.3962]],[[0.3314,0.0288,0.3962],[0.3217,0.0278,0.3809]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3323,0.0072,0.4173]],[[0.3323,0.0072,0.4173],[0.3325,0.008,0.3911]],[[0.3325,0.008,0.3911],[0.3204,0.0076,0.3753]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.326,-0.0119,0.4209]],[[0.326,-0.0119,0.4209],[0.3246,-0.0127,0.3961]],[[0.3246,-0.0127,0.3961],[0.3143,-0.0121,0.3812]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.316,-0.0328,0.4272]],[[0.316,-0.0328,0.4272],[0.3154,-0.0328,0.4079]],[[0.3154,-0.0328,0.4079],[0.3067,-0.0334,0.395]]]],"fingertips":[[0.3409,0.0536,0.3896],[0.3217,0.0278,0.3809],[0.3204,0.0076,0.3753],[0.3143,-0.0121,0.3812],[0.3067,-0.0334,0.395]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2771,0.0603,0.4379]],[[0.2771,0.0603,0.4379],[0.3072,0.0598,0.4164]],[[0.3072,0.0598,0.4164],[0.3248,0.0563,0.4028]],[[0.3248,0.0563,0.4028],[0.3416,0.0546,0.3892]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3325,0.0288,0.4213]],[[0.3325,0.0288,0.4213],[0.3328,0.0292,0.3983]],[[0.3328,0.0292,0.3983],[0.322,0.0288,0.3821]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.332,0.0065,0.4195]],[[0.332,0.0065,0.4195],[0.333,0.0081,0.3905]],[[0.333,0.0081,0.3905],[0.3208,0.0088,0.3746]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3256,-0.0126,0.4213]],[[0.3256,-0.0126,0.4213],[0.3265,-0.0119,0.3967]],[[0.3265,-0.0119,0.3967],[0.3149,-0.0121,0.3823]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.3169,-0.0326,0.4269]],[[0.3169,-0.0326,0.4269],[0.3164,-0.0328,0.4086]],[[0.3164,-0.0328,0.4086],[0.3069,-0.0321,0.396]]]],"fingertips":[[0.3416,0.0546,0.3892],[0.322,0.0288,0.3821],[0.3208,0.0088,0.3746],[0.3149,-0.0121,0.3823],[0.3069,-0.0321,0.396]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.276,0.06,0.4387]],[[0.276,0.06,0.4387],[0.3053,0.0592,0.4167]],[[0.3053,0.0592,0.4167],[0.325,0.0558,0.4027]],[[0.325,0.0558,0.4027],[0.3401,0.0543,0.391]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3313,0.0288,0.4218]],[[0.3313,0.0288,0.4218],[0.3318,0.0287,0.3974]],[[0.3318,0.0287,0.3974],[0.3209,0.0288,0.3841]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3314,0.0078,0.4187]],[[0.3314,0.0078,0.4187],[0.3308,0.0087,0.3922]],[[0.3308,0.0087,0.3922],[0.3203,0.0076,0.376]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.324,-0.0124,0.4214]],[[0.324,-0.0124,0.4214],[0.3242,-0.0127,0.3966]],[[0.3242,-0.0127,0.3966],[0.3139,-0.0117,0.3817]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3157,-0.033,0.4283]],[[0.3157,-0.033,0.4283],[0.3148,-0.0336,0.409]],[[0.3148,-0.0336,0.409],[0.3054,-0.0317,0.3962]]]],"fingertips":[[0.3401,0.0543,0.391],[0.3209,0.0288,0.3841],[0.3203,0.0076,0.376],[0.3139,-0.0117,0.3817],[0.3054,-0.0317,0.3962]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.2758,0.0604,0.4389]],[[0.2758,0.0604,0.4389],[0.3054,0.0597,0.4178]],[[0.3054,0.0597,0.4178],[0.3242,0.0565,0.4028]],[[0.3242,0.0565,0.4028],[0.3402,0.0539,0.3909]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3317,0.0291,0.4225]],[[0.3317,0.0291,0.4225],[0.3309,0.0294,0.3969]],[[0.3309,0.0294,0.3969],[0.3206,0.0286,0.3827]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3316,0.0075,0.4195]],[[0.3316,0.0075,0.4195],[0.3309,0.0087,0.3916]],[[0.3309,0.0087,0.3916],[0.3211,0.0081,0.3767]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3235,-0.0124,0.4221]],[[0.3235,-0.0124,0.4221],[0.3247,-0.0121,0.3965]],[[0.3247,-0.0121,0.3965],[0.3136,-0.0119,0.3823]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3148,-0.0337,0.428]],[[0.3148,-0.0337,0.428],[0.3145,-0.0319,0.4089]],[[0.3145,-0.0319,0.4089],[0.3053,-0.0325,0.3956]]]],"fingertips":[[0.3402,0.0539,0.3909],[0.3206,0.0286,0.3827],[0.3211,0.0081,0.3767],[0.3136,-0.0119,0.3823],[0.3053,-0.0325,0.3956]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.2775,0.0597,0.4388]],[[0.2775,0.0597,0.4388],[0.3063,0.0597,0.4177]],[[0.3063,0.0597,0.4177],[0.3251,0.056,0.403]],[[0.3251,0.056,0.403],[0.3404,0.0538,0.3899]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3323,0.0291,0.4218]],[[0.3323,0.0291,0.4218],[0.3327,0.0291,0.397]],[[0.3327,0.0291,0.397],[0.3221,0.0288,0.3823]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3325,0.0072,0.419]],[[0.3325,0.0072,0.419],[0.3329,0.0089,0.3916]],[[0.3329,0.0089,0.3916],[0.321,0.0086,0.377]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3256,-0.0124,0.4204]],[[0.3256,-0.0124,0.4204],[0.3249,-0.0119,0.3965]],[[0.3249,-0.0119,0.3965],[0.3145,-0.0115,0.3823]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3161,-0.0335,0.429]],[[0.3161,-0.0335,0.429],[0.3158,-0.0332,0.4087]],[[0.3158,-0.0332,0.4087],[0.3074,-0.0327,0.3959]]]],"fingertips":[[0.3404,0.0538,0.3899],[0.3221,0.0288,0.3823],[0.321,0.0086,0.377],[0.3145,-0.0115,0.3823],[0.3074,-0.0327,0.3959]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.2767,0.0586,0.4388]],[[0.2767,0.0586,0.4388],[0.3069,0.0591,0.417]],[[0.3069,0.0591,0.417],[0.3253,0.0565,0.4037]],[[0.3253,0.0565,0.4037],[0.3412,0.0539,0.3912]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3324,0.0285,0.421]],[[0.3324,0.0285,0.421],[0.3321,0.029,0.3975]],[[0.3321,0.029,0.3975],[0.3219,0.0285,0.3837]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3322,0.0077,0.4189]],[[0.3322,0.0077,0.4189],[0.331,0.0082,0.3914]],[[0.331,0.0082,0.3914],[0.3207,0.0076,0.3769]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3239,-0.0121,0.4227]],[[0.3239,-0.0121,0.4227],[0.3257,-0.0125,0.397]],[[0.3257,-0.0125,0.397],[0.3147,-0.0127,0.3821]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3171,-0.0337,0.4287]],[[0.3171,-0.0337,0.4287],[0.3166,-0.0334,0.4088]],[[0.3166,-0.0334,0.4088],[0.3069,-0.0323,0.3959]]]],"fingertips":[[0.3412,0.0539,0.3912],[0.3219,0.0285,0.3837],[0.3207,0.0076,0.3769],[0.3147,-0.0127,0.3821],[0.3069,-0.0323,0.3959]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2778,0.0609,0.4388]],[[0.2778,0.0609,0.4388],[0.3078,0.0591,0.4168]],[[0.3078,0.0591,0.4168],[0.3261,0.0568,0.4023]],[[0.3261,0.0568,0.4023],[0.3419,0.0541,0.391]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.3341,0.0293,0.4218]],[[0.3341,0.0293,0.4218],[0.3334,0.0287,0.3976]],[[0.3334,0.0287,0.3976],[0.3228,0.0292,0.3836]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3344,0.0083,0.4183]],[[0.3344,0.0083,0.4183],[0.3326,0.0079,0.3913]],[[0.3326,0.0079,0.3913],[0.3221,0.0084,0.3772]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.3273,-0.0107,0.4224]],[[0.3273,-0.0107,0.4224],[0.327,-0.0111,0.3962]],[[0.327,-0.0111,0.3962],[0.3162,-0.0116,0.383]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3176,-0.0325,0.4282]],[[0.3176,-0.0325,0.4282],[0.3167,-0.0321,0.4093]],[[0.3167,-0.0321,0.4093],[0.3078,-0.0316,0.3959]]]],"fingertips":[[0.3419,0.0541,0.391],[0.3228,0.0292,0.3836],[0.3221,0.0084,0.3772],[0.3162,-0.0116,0.383],[0.3078,-0.0316,0.3959]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2778,0.0594,0.4386]],[[0.2778,0.0594,0.4386],[0.3072,0.0599,0.4175]],[[0.3072,0.0599,0.4175],[0.325,0.0571,0.4023]],[[0.325,0.0571,0.4023],[0.3415,0.0533,0.3908]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3325,0.0293,0.4216]],[[0.3325,0.0293,0.4216],[0.3327,0.0291,0.3977]],[[0.3327,0.0291,0.3977],[0.3223,0.0293,0.3829]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3333,0.0076,0.4183]],[[0.3333,0.0076,0.4183],[0.3322,0.0079,0.3913]],[[0.3322,0.0079,0.3913],[0.3215,0.008,0.3764]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.326,-0.0125,0.4212]],[[0.326,-0.0125,0.4212],[0.3252,-0.0122,0.3961]],[[0.3252,-0.0122,0.3961],[0.3148,-0.0112,0.3818]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.3168,-0.0327,0.428]],[[0.3168,-0.0327,0.428],[0.3166,-0.0337,0.4084]],[[0.3166,-0.0337,0.4084],[0.307,-0.0319,0.3957]]]],"fingertips":[[0.3415,0.0533,0.3908],[0.3223,0.0293,0.3829],[0.3215,0.008,0.3764],[0.3148,-0.0112,0.3818],[0.307,-0.0319,0.3957]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.2774,0.0608,0.4387]],[[0.2774,0.0608,0.4387],[0.3071,0.0596,0.4175]],[[0.3071,0.0596,0.4175],[0.3262,0.0574,0.403]],[[0.3262,0.0574,0.403],[0.3418,0.0549,0.3911]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3336,0.0298,0.422]],[[0.3336,0.0298,0.422],[0.333,0.0297,0.3976]],[[0.333,0.0297,0.3976],[0.3225,0.0282,0.3834]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.333,0.0083,0.4189]],[[0.333,0.0083,0.4189],[0.3336,0.0088,0.3924]],[[0.3336,0.0088,0.3924],[0.321,0.0088,0.3761]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3254,-0.0117,0.4227]],[[0.3254,-0.0117,0.4227],[0.3265,-0.0124,0.3967]],[[0.3265,-0.0124,0.3967],[0.3148,-0.0116,0.3821]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3163,-0.0318,0.4278]],[[0.3163,-0.0318,0.4278],[0.3164,-0.0322,0.4102]],[[0.3164,-0.0322,0.4102],[0.307,-0.0315,0.3971]]]],"fingertips":[[0.3418,0.0549,0.3911],[0.3225,0.0282,0.3834],[0.321,0.0088,0.3761],[0.3148,-0.0116,0.3821],[0.307,-0.0315,0.3971]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2771,0.06,0.4385]],[[0.2771,0.06,0.4385],[0.3065,0.0589,0.4178]],[[0.3065,0.0589,0.4178],[0.3253,0.0562,0.4025]],[[0.3253,0.0562,0.4025],[0.3412,0.0534,0.3909]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3329,0.0283,0.4214]],[[0.3329,0.0283,0.4214],[0.3321,0.0298,0.3969]],[[0.3321,0.0298,0.3969],[0.3218,0.0271,0.3826]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3322,0.0076,0.4183]],[[0.3322,0.0076,0.4183],[0.3328,0.0072,0.3916]],[[0.3328,0.0072,0.3916],[0.3214,0.0067,0.3754]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3267,-0.0133,0.4212]],[[0.3267,-0.0133,0.4212],[0.3249,-0.0131,0.3962]],[[0.3249,-0.0131,0.3962],[0.3149,-0.0125,0.3815]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3165,-0.0341,0.4283]],[[0.3165,-0.0341,0.4283],[0.3157,-0.0346,0.4083]],[[0.3157,-0.0346,0.4083],[0.3071,-0.0335,0.3965]]]],"fingertips":[[0.3412,0.0534,0.3909],[0.3218,0.0271,0.3826],[0.3214,0.0067,0.3754],[0.3149,-0.0125,0.3815],[0.3071,-0.0335,0.3965]]}],"pinch":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2768,0.0617,0.4409]],[[0.2768,0.0617,0.4409],[0.3075,0.0728,0.4253]],[[0.3075,0.0728,0.4253],[0.325,0.0708,0.4102]],[[0.325,0.0708,0.4102],[0.3419,0.0675,0.3978]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.3374,0.0288,0.4265]],[[0.3374,0.0288,0.4265],[0.3445,0.0285,0.4038]],[[0.3445,0.0285,0.4038],[0.3416,0.028,0.3863]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.347,0.0077,0.4464]],[[0.347,0.0077,0.4464],[0.3729,0.0074,0.4418]],[[0.3729,0.0074,0.4418],[0.3922,0.0066,0.4366]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3391,-0.013,0.447]],[[0.3391,-0.013,0.447],[0.3637,-0.0149,0.4427]],[[0.3637,-0.0149,0.4427],[0.381,-0.0159,0.4381]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3268,-0.0346,0.4479]],[[0.3268,-0.0346,0.4479],[0.3448,-0.0357,0.4446]],[[0.3448,-0.0357,0.4446],[0.3604,-0.0373,0.4409]]]],"fingertips":[[0.3419,0.0675,0.3978],[0.3416,0.028,0.3863],[0.3922,0.0066,0.4366],[0.381,-0.0159,0.4381],[0.3604,-0.0373,0.4409]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.2771,0.0628,0.4416]],[[0.2771,0.0628,0.4416],[0.306,0.0747,0.4263]],[[0.306,0.0747,0.4263],[0.3265,0.0708,0.4106]],[[0.3265,0.0708,0.4106],[0.3414,0.0701,0.3988]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3377,0.0302,0.4274]],[[0.3377,0.0302,0.4274],[0.3443,0.0304,0.4053]],[[0.3443,0.0304,0.4053],[0.3416,0.0298,0.3876]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3475,0.0085,0.4468]],[[0.3475,0.0085,0.4468],[0.3731,0.0085,0.4421]],[[0.3731,0.0085,0.4421],[0.391,0.009,0.4381]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3385,-0.0119,0.4478]],[[0.3385,-0.0119,0.4478],[0.363,-0.0119,0.4434]],[[0.363,-0.0119,0.4434],[0.3807,-0.0133,0.4382]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3258,-0.0338,0.4482]],[[0.3258,-0.0338,0.4482],[0.3447,-0.034,0.4452]],[[0.3447,-0.034,0.4452],[0.3597,-0.0363,0.4419]]]],"fingertips":[[0.3414,0.0701,0.3988],[0.3416,0.0298,0.3876],[0.391,0.009,0.4381],[0.3807,-0.0133,0.4382],[0.3597,-0.0363,0.4419]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.2764,0.0617,0.4408]],[[0.2764,0.0617,0.4408],[0.3062,0.0735,0.4244]],[[0.3062,0.0735,0.4244],[0.3256,0.071,0.4101]],[[0.3256,0.071,0.4101],[0.3411,0.0682,0.3975]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3379,0.0288,0.4262]],[[0.3379,0.0288,0.4262],[0.3447,0.0292,0.4039]],[[0.3447,0.0292,0.4039],[0.3413,0.0288,0.3856]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3453,0.008,0.4465]],[[0.3453,0.008,0.4465],[0.3719,0.0079,0.4419]],[[0.3719,0.0079,0.4419],[0.3913,0.0079,0.4371]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.3377,-0.0133,0.4467]],[[0.3377,-0.0133,0.4467],[0.3634,-0.0132,0.4418]],[[0.3634,-0.0132,0.4418],[0.3803,-0.0146,0.4376]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.325,-0.0345,0.4478]],[[0.325,-0.0345,0.4478],[0.3452,-0.0357,0.4445]],[[0.3452,-0.0357,0.4445],[0.3597,-0.038,0.4401]]]],"fingertips":[[0.3411,0.0682,0.3975],[0.3413,0.0288,0.3856],[0.3913,0.0079,0.4371],[0.3803,-0.0146,0.4376],[0.3597,-0.038,0.4401]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2766,0.0635,0.4409]],[[0.2766,0.0635,0.4409],[0.3066,0.0741,0.4253]],[[0.3066,0.0741,0.4253],[0.3256,0.0705,0.4106]],[[0.3256,0.0705,0.4106],[0.3417,0.0687,0.3977]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3374,0.0293,0.4263]],[[0.3374,0.0293,0.4263],[0.3451,0.0299,0.4034]],[[0.3451,0.0299,0.4034],[0.3416,0.0293,0.3853]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3457,0.0086,0.4465]],[[0.3457,0.0086,0.4465],[0.3725,0.0082,0.4411]],[[0.3725,0.0082,0.4411],[0.3904,0.0087,0.4371]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.337,-0.0119,0.4466]],[[0.337,-0.0119,0.4466],[0.3615,-0.0136,0.4422]],[[0.3615,-0.0136,0.4422],[0.3798,-0.0148,0.4381]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.325,-0.0336,0.4476]],[[0.325,-0.0336,0.4476],[0.345,-0.0359,0.4443]],[[0.345,-0.0359,0.4443],[0.3611,-0.0373,0.4398]]]],"fingertips":[[0.3417,0.0687,0.3977],[0.3416,0.0293,0.3853],[0.3904,0.0087,0.4371],[0.3798,-0.0148,0.4381],[0.3611,-0.0373,0.4398]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2763,0.0624,0.4407]],[[0.2763,0.0624,0.4407],[0.3064,0.0748,0.4246]],[[0.3064,0.0748,0.4246],[0.3257,0.071,0.4094]],[[0.3257,0.071,0.4094],[0.3411,0.0692,0.3975]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3371,0.0282,0.4266]],[[0.3371,0.0282,0.4266],[0.345,0.0298,0.4037]],[[0.345,0.0298,0.4037],[0.3418,0.0299,0.3843]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.3449,0.0085,0.4457]],[[0.3449,0.0085,0.4457],[0.3731,0.0081,0.4409]],[[0.3731,0.0081,0.4409],[0.3903,0.0084,0.4359]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3382,-0.0126,0.4457]],[[0.3382,-0.0126,0.4457],[0.3634,-0.0134,0.442]],[[0.3634,-0.0134,0.442],[0.3802,-0.0143,0.4367]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3266,-0.0348,0.4471]],[[0.3266,-0.0348,0.4471],[0.3441,-0.0351,0.4432]],[[0.3441,-0.0351,0.4432],[0.36,-0.0359,0.4397]]]],"fingertips":[[0.3411,0.0692,0.3975],[0.3418,0.0299,0.3843],[0.3903,0.0084,0.4359],[0.3802,-0.0143,0.4367],[0.36,-0.0359,0.4397]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.2755,0.0629,0.4412]],[[0.2755,0.0629,0.4412],[0.3062,0.0748,0.4246]],[[0.3062,0.0748,0.4246],[0.3244,0.071,0.4094]],[[0.3244,0.071,0.4094],[0.3406,0.0689,0.3966]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3366,0.029,0.4266]],[[0.3366,0.029,0.4266],[0.345,0.0295,0.4043]],[[0.345,0.0295,0.4043],[0.3404,0.0298,0.3856]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.345,0.009,0.445]],[[0.345,0.009,0.445],[0.3715,0.0086,0.4415]],[[0.3715,0.0086,0.4415],[0.3908,0.0083,0.4359]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3371,-0.0117,0.4453]],[[0.3371,-0.0117,0.4453],[0.3617,-0.0135,0.4429]],[[0.3617,-0.0135,0.4429],[0.3795,-0.0136,0.4372]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3242,-0.0328,0.4477]],[[0.3242,-0.0328,0.4477],[0.3437,-0.035,0.444]],[[0.3437,-0.035,0.444],[0.3582,-0.0363,0.4402]]]],"fingertips":[[0.3406,0.0689,0.3966],[0.3404,0.0298,0.3856],[0.3908,0.0083,0.4359],[0.3795,-0.0136,0.4372],[0.3582,-0.0363,0.4402]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.275,0.0624,0.4405]],[[0.275,0.0624,0.4405],[0.3053,0.0738,0.4247]],[[0.3053,0.0738,0.4247],[0.3241,0.0697,0.4105]],[[0.3241,0.0697,0.4105],[0.3403,0.0678,0.3978]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3368,0.0293,0.4266]],[[0.3368,0.0293,0.4266],[0.3443,0.0292,0.4036]],[[0.3443,0.0292,0.4036],[0.3408,0.0291,0.3864]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3457,0.0081,0.4465]],[[0.3457,0.0081,0.4465],[0.3708,0.0072,0.4411]],[[0.3708,0.0072,0.4411],[0.3895,0.0081,0.4367]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3371,-0.0127,0.447]],[[0.3371,-0.0127,0.447],[0.3609,-0.0142,0.4421]],[[0.3609,-0.0142,0.4421],[0.3783,-0.0149,0.4381]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.3249,-0.0336,0.4471]],[[0.3249,-0.0336,0.4471],[0.3431,-0.0359,0.4442]],[[0.3431,-0.0359,0.4442],[0.3591,-0.0372,0.4402]]]],"fingertips":[[0.3403,0.0678,0.3978],[0.3408,0.0291,0.3864],[0.3895,0.0081,0.4367],[0.3783,-0.0149,0.4381],[0.3591,-0.0372,0.4402]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.2764,0.0646,0.4404]],[[0.2764,0.0646,0.4404],[0.3071,0.0749,0.4237]],[[0.3071,0.0749,0.4237],[0.3251,0.0714,0.4099]],[[0.3251,0.0714,0.4099],[0.3403,0.0701,0.3976]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3375,0.0297,0.4264]],[[0.3375,0.0297,0.4264],[0.3438,0.0295,0.4035]],[[0.3438,0.0295,0.4035],[0.3427,0.0304,0.386]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3462,0.0084,0.4466]],[[0.3462,0.0084,0.4466],[0.3735,0.0087,0.4418]],[[0.3735,0.0087,0.4418],[0.391,0.0091,0.437]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3372,-0.0108,0.4457]],[[0.3372,-0.0108,0.4457],[0.3626,-0.0129,0.4416]],[[0.3626,-0.0129,0.4416],[0.3793,-0.0122,0.4367]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.326,-0.0324,0.4467]],[[0.326,-0.0324,0.4467],[0.3445,-0.0345,0.4438]],[[0.3445,-0.0345,0.4438],[0.3598,-0.0361,0.4396]]]],"fingertips":[[0.3403,0.0701,0.3976],[0.3427,0.0304,0.386],[0.391,0.0091,0.437],[0.3793,-0.0122,0.4367],[0.3598,-0.0361,0.4396]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2777,0.0633,0.4414]],[[0.2777,0.0633,0.4414],[0.3065,0.0729,0.4234]],[[0.3065,0.0729,0.4234],[0.3259,0.0713,0.4092]],[[0.3259,0.0713,0.4092],[0.3416,0.0681,0.3982]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.337,0.0302,0.4265]],[[0.337,0.0302,0.4265],[0.3447,0.0298,0.4037]],[[0.3447,0.0298,0.4037],[0.3407,0.0299,0.3857]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.347,0.0084,0.4456]],[[0.347,0.0084,0.4456],[0.3727,0.0081,0.4411]],[[0.3727,0.0081,0.4411],[0.3919,0.0087,0.4366]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3393,-0.0118,0.4463]],[[0.3393,-0.0118,0.4463],[0.3637,-0.013,0.4414]],[[0.3637,-0.013,0.4414],[0.3804,-0.0142,0.4373]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3255,-0.0336,0.4483]],[[0.3255,-0.0336,0.4483],[0.3442,-0.0342,0.4445]],[[0.3442,-0.0342,0.4445],[0.3599,-0.0371,0.4401]]]],"fingertips":[[0.3416,0.0681,0.3982],[0.3407,0.0299,0.3857],[0.3919,0.0087,0.4366],[0.3804,-0.0142,0.4373],[0.3599,-0.0371,0.4401]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2763,0.0625,0.4413]],[[0.2763,0.0625,0.4413],[0.3057,0.0726,0.4245]],[[0.3057,0.0726,0.4245],[0.3253,0.0695,0.4092]],[[0.3253,0.0695,0.4092],[0.3415,0.0668,0.3975]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.3373,0.0288,0.4266]],[[0.3373,0.0288,0.4266],[0.345,0.0285,0.4036]],[[0.345,0.0285,0.4036],[0.3418,0.0276,0.3868]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3454,0.007,0.4468]],[[0.3454,0.007,0.4468],[0.3723,0.0076,0.4408]],[[0.3723,0.0076,0.4408],[0.3908,0.0072,0.4366]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3374,-0.0134,0.4462]],[[0.3374,-0.0134,0.4462],[0.3617,-0.0133,0.4416]],[[0.3617,-0.0133,0.4416],[0.3795,-0.0146,0.4382]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.3259,-0.0343,0.4467]],[[0.3259,-0.0343,0.4467],[0.3443,-0.0372,0.445]],[[0.3443,-0.0372,0.445],[0.3609,-0.0374,0.4399]]]],"fingertips":[[0.3415,0.0668,0.3975],[0.3418,0.0276,0.3868],[0.3908,0.0072,0.4366],[0.3795,-0.0146,0.4382],[0.3609,-0.0374,0.4399]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2758,0.0621,0.4418]],[[0.2758,0.0621,0.4418],[0.3058,0.0742,0.4247]],[[0.3058,0.0742,0.4247],[0.3232,0.0705,0.4116]],[[0.3232,0.0705,0.4116],[0.3405,0.0682,0.3987]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.3362,0.0294,0.4276]],[[0.3362,0.0294,0.4276],[0.3444,0.0299,0.4045]],[[0.3444,0.0299,0.4045],[0.3422,0.0297,0.3871]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3455,0.008,0.4461]],[[0.3455,0.008,0.4461],[0.3725,0.0078,0.4411]],[[0.3725,0.0078,0.4411],[0.3902,0.0071,0.4367]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.338,-0.0121,0.4472]],[[0.338,-0.0121,0.4472],[0.3619,-0.0135,0.4432]],[[0.3619,-0.0135,0.4432],[0.379,-0.0139,0.4381]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3254,-0.0336,0.4481]],[[0.3254,-0.0336,0.4481],[0.3442,-0.0362,0.4445]],[[0.3442,-0.0362,0.4445],[0.3585,-0.0368,0.44]]]],"fingertips":[[0.3405,0.0682,0.3987],[0.3422,0.0297,0.3871],[0.3902,0.0071,0.4367],[0.379,-0.0139,0.4381],[0.3585,-0.0368,0.44]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2755,0.0628,0.4408]],[[0.2755,0.0628,0.4408],[0.3052,0.0744,0.4243]],[[0.3052,0.0744,0.4243],[0.325,0.0705,0.4101]],[[0.325,0.0705,0.4101],[0.3403,0.0676,0.3967]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3374,0.0284,0.4259]],[[0.3374,0.0284,0.4259],[0.3433,0.0294,0.4022]],[[0.3433,0.0294,0.4022],[0.3409,0.0288,0.3838]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3453,0.0072,0.4447]],[[0.3453,0.0072,0.4447],[0.3724,0.008,0.4406]],[[0.3724,0.008,0.4406],[0.3899,0.0076,0.4355]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.3377,-0.0124,0.4458]],[[0.3377,-0.0124,0.4458],[0.3613,-0.0142,0.4415]],[[0.3613,-0.0142,0.4415],[0.3789,-0.0146,0.4367]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.325,-0.0336,0.4465]],[[0.325,-0.0336,0.4465],[0.3433,-0.0353,0.4427]],[[0.3433,-0.0353,0.4427],[0.3595,-0.0381,0.4389]]]],"fingertips":[[0.3403,0.0676,0.3967],[0.3409,0.0288,0.3838],[0.3899,0.0076,0.4355],[0.3789,-0.0146,0.4367],[0.3595,-0.0381,0.4389]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2755,0.0629,0.4402]],[[0.2755,0.0629,0.4402],[0.3066,0.0739,0.4234]],[[0.3066,0.0739,0.4234],[0.3242,0.0704,0.4098]],[[0.3242,0.0704,0.4098],[0.341,0.0687,0.3962]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3367,0.029,0.4262]],[[0.3367,0.029,0.4262],[0.3446,0.0298,0.4044]],[[0.3446,0.0298,0.4044],[0.3413,0.0297,0.385]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.3449,0.0065,0.4469]],[[0.3449,0.0065,0.4469],[0.3729,0.0081,0.44]],[[0.3729,0.0081,0.44],[0.3902,0.0088,0.4348]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3373,-0.0131,0.4462]],[[0.3373,-0.0131,0.4462],[0.3631,-0.0134,0.4421]],[[0.3631,-0.0134,0.4421],[0.3796,-0.0147,0.4378]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.3259,-0.0334,0.4462]],[[0.3259,-0.0334,0.4462],[0.3443,-0.0354,0.4435]],[[0.3443,-0.0354,0.4435],[0.3597,-0.0369,0.4398]]]],"fingertips":[[0.341,0.0687,0.3962],[0.3413,0.0297,0.385],[0.3902,0.0088,0.4348],[0.3796,-0.0147,0.4378],[0.3597,-0.0369,0.4398]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.2745,0.0625,0.441]],[[0.2745,0.0625,0.441],[0.3047,0.0733,0.4238]],[[0.3047,0.0733,0.4238],[0.3244,0.0698,0.4098]],[[0.3244,0.0698,0.4098],[0.3395,0.0684,0.398]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3355,0.029,0.4268]],[[0.3355,0.029,0.4268],[0.3437,0.0293,0.4034]],[[0.3437,0.0293,0.4034],[0.3401,0.0297,0.387]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3443,0.0078,0.4461]],[[0.3443,0.0078,0.4461],[0.3706,0.0087,0.4417]],[[0.3706,0.0087,0.4417],[0.3897,0.0076,0.4362]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.3357,-0.0128,0.4463]],[[0.3357,-0.0128,0.4463],[0.3609,-0.0142,0.442]],[[0.3609,-0.0142,0.442],[0.3786,-0.0143,0.4372]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3247,-0.0338,0.4476]],[[0.3247,-0.0338,0.4476],[0.3428,-0.0361,0.4438]],[[0.3428,-0.0361,0.4438],[0.3582,-0.0365,0.4401]]]],"fingertips":[[0.3395,0.0684,0.398],[0.3401,0.0297,0.387],[0.3897,0.0076,0.4362],[0.3786,-0.0143,0.4372],[0.3582,-0.0365,0.4401]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.2742,0.0629,0.4412]],[[0.2742,0.0629,0.4412],[0.3048,0.0738,0.4248]],[[0.3048,0.0738,0.4248],[0.3236,0.0706,0.4098]],[[0.3236,0.0706,0.4098],[0.3396,0.068,0.398]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3359,0.0293,0.4274]],[[0.3359,0.0293,0.4274],[0.3428,0.03,0.403]],[[0.3428,0.03,0.403],[0.3399,0.0295,0.3856]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3445,0.0075,0.4469]],[[0.3445,0.0075,0.4469],[0.3707,0.0087,0.4411]],[[0.3707,0.0087,0.4411],[0.3905,0.0081,0.4369]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3352,-0.0128,0.4469]],[[0.3352,-0.0128,0.4469],[0.3613,-0.0136,0.4419]],[[0.3613,-0.0136,0.4419],[0.3782,-0.0145,0.4378]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3238,-0.0345,0.4472]],[[0.3238,-0.0345,0.4472],[0.3424,-0.0344,0.4438]],[[0.3424,-0.0344,0.4438],[0.3581,-0.0373,0.4395]]]],"fingertips":[[0.3396,0.068,0.398],[0.3399,0.0295,0.3856],[0.3905,0.0081,0.4369],[0.3782,-0.0145,0.4378],[0.3581,-0.0373,0.4395]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.2759,0.0622,0.4411]],[[0.2759,0.0622,0.4411],[0.3057,0.0737,0.4248]],[[0.3057,0.0737,0.4248],[0.3245,0.07,0.4101]],[[0.3245,0.07,0.4101],[0.3398,0.0678,0.397]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3365,0.0293,0.4267]],[[0.3365,0.0293,0.4267],[0.3446,0.0297,0.403]],[[0.3446,0.0297,0.403],[0.3413,0.0298,0.3852]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3454,0.0072,0.4463]],[[0.3454,0.0072,0.4463],[0.3727,0.0089,0.4412]],[[0.3727,0.0089,0.4412],[0.3904,0.0086,0.4372]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3373,-0.0128,0.4453]],[[0.3373,-0.0128,0.4453],[0.3615,-0.0134,0.4419]],[[0.3615,-0.0134,0.4419],[0.3792,-0.0141,0.4378]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3251,-0.0343,0.4483]],[[0.3251,-0.0343,0.4483],[0.3437,-0.0357,0.4436]],[[0.3437,-0.0357,0.4436],[0.3602,-0.0374,0.4397]]]],"fingertips":[[0.3398,0.0678,0.397],[0.3413,0.0298,0.3852],[0.3904,0.0086,0.4372],[0.3792,-0.0141,0.4378],[0.3602,-0.0374,0.4397]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.2751,0.0611,0.4411]],[[0.2751,0.0611,0.4411],[0.3063,0.0732,0.424]],[[0.3063,0.0732,0.424],[0.3247,0.0706,0.4108]],[[0.3247,0.0706,0.4108],[0.3406,0.068,0.3982]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3366,0.0287,0.4259]],[[0.3366,0.0287,0.4259],[0.3439,0.0296,0.4035]],[[0.3439,0.0296,0.4035],[0.3411,0.0294,0.3866]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3451,0.0077,0.4463]],[[0.3451,0.0077,0.4463],[0.3708,0.0082,0.4409]],[[0.3708,0.0082,0.4409],[0.3901,0.0076,0.4371]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3357,-0.0125,0.4475]],[[0.3357,-0.0125,0.4475],[0.3624,-0.014,0.4424]],[[0.3624,-0.014,0.4424],[0.3794,-0.0153,0.4376]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3261,-0.0345,0.448]],[[0.3261,-0.0345,0.448],[0.3445,-0.0359,0.4437]],[[0.3445,-0.0359,0.4437],[0.3596,-0.037,0.4397]]]],"fingertips":[[0.3406,0.068,0.3982],[0.3411,0.0294,0.3866],[0.3901,0.0076,0.4371],[0.3794,-0.0153,0.4376],[0.3596,-0.037,0.4397]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2763,0.0634,0.4411]],[[0.2763,0.0634,0.4411],[0.3072,0.0732,0.4239]],[[0.3072,0.0732,0.4239],[0.3255,0.0709,0.4094]],[[0.3255,0.0709,0.4094],[0.3413,0.0682,0.3981]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.3383,0.0295,0.4267]],[[0.3383,0.0295,0.4267],[0.3453,0.0293,0.4036]],[[0.3453,0.0293,0.4036],[0.3421,0.0302,0.3865]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3473,0.0083,0.4456]],[[0.3473,0.0083,0.4456],[0.3724,0.0079,0.4408]],[[0.3724,0.0079,0.4408],[0.3916,0.0084,0.4374]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.339,-0.0112,0.4473]],[[0.339,-0.0112,0.4473],[0.3637,-0.0125,0.4416]],[[0.3637,-0.0125,0.4416],[0.3808,-0.0142,0.4385]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3266,-0.0334,0.4475]],[[0.3266,-0.0334,0.4475],[0.3447,-0.0347,0.4442]],[[0.3447,-0.0347,0.4442],[0.3606,-0.0364,0.4398]]]],"fingertips":[[0.3413,0.0682,0.3981],[0.3421,0.0302,0.3865],[0.3916,0.0084,0.4374],[0.3808,-0.0142,0.4385],[0.3606,-0.0364,0.4398]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2763,0.0619,0.4409]],[[0.2763,0.0619,0.4409],[0.3066,0.074,0.4246]],[[0.3066,0.074,0.4246],[0.3244,0.0712,0.4093]],[[0.3244,0.0712,0.4093],[0.3409,0.0674,0.3979]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3367,0.0295,0.4265]],[[0.3367,0.0295,0.4265],[0.3445,0.0297,0.4038]],[[0.3445,0.0297,0.4038],[0.3416,0.0302,0.3858]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3463,0.0076,0.4457]],[[0.3463,0.0076,0.4457],[0.372,0.0079,0.4408]],[[0.372,0.0079,0.4408],[0.3909,0.008,0.4366]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.3377,-0.0129,0.4461]],[[0.3377,-0.0129,0.4461],[0.3618,-0.0137,0.4415]],[[0.3618,-0.0137,0.4415],[0.3795,-0.0138,0.4373]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.3259,-0.0335,0.4472]],[[0.3259,-0.0335,0.4472],[0.3445,-0.0362,0.4433]],[[0.3445,-0.0362,0.4433],[0.3597,-0.0366,0.4395]]]],"fingertips":[[0.3409,0.0674,0.3979],[0.3416,0.0302,0.3858],[0.3909,0.008,0.4366],[0.3795,-0.0138,0.4373],[0.3597,-0.0366,0.4395]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.2759,0.0633,0.441]],[[0.2759,0.0633,0.441],[0.3065,0.0737,0.4246]],[[0.3065,0.0737,0.4246],[0.3256,0.0715,0.41]],[[0.3256,0.0715,0.41],[0.3412,0.069,0.3981]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3378,0.03,0.4269]],[[0.3378,0.03,0.4269],[0.3448,0.0303,0.4036]],[[0.3448,0.0303,0.4036],[0.3417,0.0292,0.3863]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.3459,0.0083,0.4463]],[[0.3459,0.0083,0.4463],[0.3734,0.0088,0.4419]],[[0.3734,0.0088,0.4419],[0.3905,0.0088,0.4363]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3371,-0.0121,0.4476]],[[0.3371,-0.0121,0.4476],[0.3632,-0.0138,0.4421]],[[0.3632,-0.0138,0.4421],[0.3794,-0.0142,0.4376]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3254,-0.0326,0.4471]],[[0.3254,-0.0326,0.4471],[0.3443,-0.0348,0.4451]],[[0.3443,-0.0348,0.4451],[0.3597,-0.0362,0.441]]]],"fingertips":[[0.3412,0.069,0.3981],[0.3417,0.0292,0.3863],[0.3905,0.0088,0.4363],[0.3794,-0.0142,0.4376],[0.3597,-0.0362,0.441]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2756,0.0625,0.4408]],[[0.2756,0.0625,0.4408],[0.3059,0.073,0.4248]],[[0.3059,0.073,0.4248],[0.3247,0.0703,0.4096]],[[0.3247,0.0703,0.4096],[0.3406,0.0675,0.3979]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3371,0.0285,0.4263]],[[0.3371,0.0285,0.4263],[0.344,0.0304,0.4029]],[[0.344,0.0304,0.4029],[0.341,0.028,0.3855]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3451,0.0076,0.4457]],[[0.3451,0.0076,0.4457],[0.3726,0.0072,0.4412]],[[0.3726,0.0072,0.4412],[0.3908,0.0067,0.4356]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3384,-0.0137,0.446]],[[0.3384,-0.0137,0.446],[0.3615,-0.0146,0.4416]],[[0.3615,-0.0146,0.4416],[0.3796,-0.0151,0.437]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3256,-0.035,0.4475]],[[0.3256,-0.035,0.4475],[0.3436,-0.0371,0.4431]],[[0.3436,-0.0371,0.4431],[0.3599,-0.0383,0.4403]]]],"fingertips":[[0.3406,0.0675,0.3979],[0.341,0.028,0.3855],[0.3908,0.0067,0.4356],[0.3796,-0.0151,0.437],[0.3599,-0.0383,0.4403]]}],"two":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2788,0.0581,0.4377]],[[0.2788,0.0581,0.4377],[0.3075,0.0539,0.4163]],[[0.3075,0.0539,0.4163],[0.3251,0.0518,0.4012]],[[0.3251,0.0518,0.4012],[0.342,0.0486,0.3889]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.345,0.0292,0.449]],[[0.345,0.0292,0.449],[0.3687,0.0297,0.4478]],[[0.3687,0.0297,0.4478],[0.387,0.0303,0.4467]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.3472,0.0077,0.4492]],[[0.3472,0.0077,0.4492],[0.3734,0.0074,0.4479]],[[0.3734,0.0074,0.4479],[0.3933,0.0066,0.446]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3281,-0.0125,0.4229]],[[0.3281,-0.0125,0.4229],[0.3292,-0.0136,0.3981]],[[0.3292,-0.0136,0.3981],[0.3195,-0.0134,0.3826]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3183,-0.0339,0.4292]],[[0.3183,-0.0339,0.4292],[0.3185,-0.0334,0.4103]],[[0.3185,-0.0334,0.4103],[0.3103,-0.0328,0.397]]]],"fingertips":[[0.342,0.0486,0.3889],[0.387,0.0303,0.4467],[0.3933,0.0066,0.446],[0.3195,-0.0134,0.3826],[0.3103,-0.0328,0.397]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.2792,0.0591,0.4385]],[[0.2792,0.0591,0.4385],[0.3061,0.0557,0.4173]],[[0.3061,0.0557,0.4173],[0.3265,0.0518,0.4016]],[[0.3265,0.0518,0.4016],[0.3415,0.0511,0.3899]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3454,0.0306,0.4499]],[[0.3454,0.0306,0.4499],[0.3685,0.0316,0.4493]],[[0.3685,0.0316,0.4493],[0.387,0.032,0.448]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3476,0.0085,0.4496]],[[0.3476,0.0085,0.4496],[0.3736,0.0085,0.4483]],[[0.3736,0.0085,0.4483],[0.3921,0.009,0.4475]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3276,-0.0115,0.4237]],[[0.3276,-0.0115,0.4237],[0.3285,-0.0105,0.3988]],[[0.3285,-0.0105,0.3988],[0.3192,-0.0109,0.3827]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3173,-0.0331,0.4296]],[[0.3173,-0.0331,0.4296],[0.3184,-0.0316,0.4109]],[[0.3184,-0.0316,0.4109],[0.3095,-0.0318,0.398]]]],"fingertips":[[0.3415,0.0511,0.3899],[0.387,0.032,0.448],[0.3921,0.009,0.4475],[0.3192,-0.0109,0.3827],[0.3095,-0.0318,0.398]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.2785,0.0581,0.4376]],[[0.2785,0.0581,0.4376],[0.3062,0.0545,0.4154]],[[0.3062,0.0545,0.4154],[0.3257,0.052,0.4012]],[[0.3257,0.052,0.4012],[0.3411,0.0492,0.3885]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3455,0.0291,0.4487]],[[0.3455,0.0291,0.4487],[0.3689,0.0304,0.4479]],[[0.3689,0.0304,0.4479],[0.3867,0.0311,0.446]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3454,0.008,0.4492]],[[0.3454,0.008,0.4492],[0.3724,0.0079,0.448]],[[0.3724,0.0079,0.448],[0.3923,0.0079,0.4466]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.3268,-0.0128,0.4226]],[[0.3268,-0.0128,0.4226],[0.3289,-0.0118,0.3972]],[[0.3289,-0.0118,0.3972],[0.3189,-0.0122,0.3821]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.3166,-0.0337,0.4291]],[[0.3166,-0.0337,0.4291],[0.3189,-0.0333,0.4102]],[[0.3189,-0.0333,0.4102],[0.3096,-0.0335,0.3962]]]],"fingertips":[[0.3411,0.0492,0.3885],[0.3867,0.0311,0.446],[0.3923,0.0079,0.4466],[0.3189,-0.0122,0.3821],[0.3096,-0.0335,0.3962]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2787,0.0599,0.4378]],[[0.2787,0.0599,0.4378],[0.3067,0.0551,0.4163]],[[0.3067,0.0551,0.4163],[0.3256,0.0516,0.4016]],[[0.3256,0.0516,0.4016],[0.3418,0.0498,0.3887]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3451,0.0297,0.4487]],[[0.3451,0.0297,0.4487],[0.3694,0.0311,0.4475]],[[0.3694,0.0311,0.4475],[0.387,0.0316,0.4457]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3459,0.0086,0.4493]],[[0.3459,0.0086,0.4493],[0.3731,0.0082,0.4472]],[[0.3731,0.0082,0.4472],[0.3915,0.0087,0.4465]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.326,-0.0114,0.4225]],[[0.326,-0.0114,0.4225],[0.327,-0.0122,0.3976]],[[0.327,-0.0122,0.3976],[0.3184,-0.0123,0.3826]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.3165,-0.0328,0.4289]],[[0.3165,-0.0328,0.4289],[0.3187,-0.0335,0.4101]],[[0.3187,-0.0335,0.4101],[0.3109,-0.0328,0.3959]]]],"fingertips":[[0.3418,0.0498,0.3887],[0.387,0.0316,0.4457],[0.3915,0.0087,0.4465],[0.3184,-0.0123,0.3826],[0.3109,-0.0328,0.3959]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2783,0.0588,0.4375]],[[0.2783,0.0588,0.4375],[0.3065,0.0559,0.4156]],[[0.3065,0.0559,0.4156],[0.3258,0.0521,0.4005]],[[0.3258,0.0521,0.4005],[0.3412,0.0502,0.3885]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3448,0.0285,0.4491]],[[0.3448,0.0285,0.4491],[0.3693,0.031,0.4478]],[[0.3693,0.031,0.4478],[0.3872,0.0322,0.4447]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.3451,0.0085,0.4485]],[[0.3451,0.0085,0.4485],[0.3736,0.0081,0.4471]],[[0.3736,0.0081,0.4471],[0.3914,0.0084,0.4453]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3273,-0.0122,0.4216]],[[0.3273,-0.0122,0.4216],[0.3289,-0.012,0.3974]],[[0.3289,-0.012,0.3974],[0.3188,-0.0118,0.3813]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3181,-0.034,0.4284]],[[0.3181,-0.034,0.4284],[0.3178,-0.0327,0.4089]],[[0.3178,-0.0327,0.4089],[0.3099,-0.0314,0.3957]]]],"fingertips":[[0.3412,0.0502,0.3885],[0.3872,0.0322,0.4447],[0.3914,0.0084,0.4453],[0.3188,-0.0118,0.3813],[0.3099,-0.0314,0.3957]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.2776,0.0593,0.4381]],[[0.2776,0.0593,0.4381],[0.3062,0.0558,0.4156]],[[0.3062,0.0558,0.4156],[0.3244,0.0521,0.4005]],[[0.3244,0.0521,0.4005],[0.3406,0.05,0.3877]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3442,0.0294,0.4491]],[[0.3442,0.0294,0.4491],[0.3693,0.0307,0.4483]],[[0.3693,0.0307,0.4483],[0.3858,0.0321,0.446]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.3452,0.009,0.4477]],[[0.3452,0.009,0.4477],[0.3721,0.0086,0.4477]],[[0.3721,0.0086,0.4477],[0.3919,0.0083,0.4454]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3261,-0.0113,0.4211]],[[0.3261,-0.0113,0.4211],[0.3272,-0.0121,0.3983]],[[0.3272,-0.0121,0.3983],[0.3181,-0.0112,0.3817]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3157,-0.0321,0.429]],[[0.3157,-0.0321,0.429],[0.3174,-0.0326,0.4097]],[[0.3174,-0.0326,0.4097],[0.3081,-0.0318,0.3963]]]],"fingertips":[[0.3406,0.05,0.3877],[0.3858,0.0321,0.446],[0.3919,0.0083,0.4454],[0.3181,-0.0112,0.3817],[0.3081,-0.0318,0.3963]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.277,0.0588,0.4373]],[[0.277,0.0588,0.4373],[0.3054,0.0549,0.4157]],[[0.3054,0.0549,0.4157],[0.3241,0.0508,0.4015]],[[0.3241,0.0508,0.4015],[0.3403,0.0488,0.3888]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3444,0.0297,0.4491]],[[0.3444,0.0297,0.4491],[0.3685,0.0304,0.4476]],[[0.3685,0.0304,0.4476],[0.3862,0.0314,0.4468]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3458,0.0081,0.4493]],[[0.3458,0.0081,0.4493],[0.3714,0.0072,0.4472]],[[0.3714,0.0072,0.4472],[0.3906,0.0081,0.4461]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3262,-0.0122,0.4229]],[[0.3262,-0.0122,0.4229],[0.3263,-0.0128,0.3975]],[[0.3263,-0.0128,0.3975],[0.3169,-0.0124,0.3826]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.3165,-0.0328,0.4284]],[[0.3165,-0.0328,0.4284],[0.3168,-0.0335,0.4099]],[[0.3168,-0.0335,0.4099],[0.3089,-0.0327,0.3963]]]],"fingertips":[[0.3403,0.0488,0.3888],[0.3862,0.0314,0.4468],[0.3906,0.0081,0.4461],[0.3169,-0.0124,0.3826],[0.3089,-0.0327,0.3963]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.2785,0.061,0.4372]],[[0.2785,0.061,0.4372],[0.3072,0.056,0.4147]],[[0.3072,0.056,0.4147],[0.3252,0.0525,0.401]],[[0.3252,0.0525,0.401],[0.3404,0.0512,0.3887]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3452,0.03,0.4489]],[[0.3452,0.03,0.4489],[0.3681,0.0308,0.4476]],[[0.3681,0.0308,0.4476],[0.3881,0.0327,0.4464]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3463,0.0084,0.4494]],[[0.3463,0.0084,0.4494],[0.3741,0.0087,0.448]],[[0.3741,0.0087,0.448],[0.3921,0.0091,0.4464]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3262,-0.0104,0.4216]],[[0.3262,-0.0104,0.4216],[0.3281,-0.0115,0.397]],[[0.3281,-0.0115,0.397],[0.3179,-0.0098,0.3813]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.3175,-0.0317,0.4281]],[[0.3175,-0.0317,0.4281],[0.3182,-0.0322,0.4095]],[[0.3182,-0.0322,0.4095],[0.3096,-0.0315,0.3957]]]],"fingertips":[[0.3404,0.0512,0.3887],[0.3881,0.0327,0.4464],[0.3921,0.0091,0.4464],[0.3179,-0.0098,0.3813],[0.3096,-0.0315,0.3957]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2798,0.0597,0.4382]],[[0.2798,0.0597,0.4382],[0.3066,0.054,0.4144]],[[0.3066,0.054,0.4144],[0.326,0.0524,0.4002]],[[0.326,0.0524,0.4002],[0.3417,0.0491,0.3892]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.3446,0.0306,0.449]],[[0.3446,0.0306,0.449],[0.3689,0.031,0.4478]],[[0.3689,0.031,0.4478],[0.3861,0.0322,0.4461]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.3472,0.0084,0.4484]],[[0.3472,0.0084,0.4484],[0.3733,0.0081,0.4472]],[[0.3733,0.0081,0.4472],[0.393,0.0087,0.446]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3283,-0.0114,0.4222]],[[0.3283,-0.0114,0.4222],[0.3292,-0.0116,0.3968]],[[0.3292,-0.0116,0.3968],[0.319,-0.0117,0.3818]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3171,-0.0328,0.4296]],[[0.3171,-0.0328,0.4296],[0.3179,-0.0319,0.4102]],[[0.3179,-0.0319,0.4102],[0.3097,-0.0326,0.3962]]]],"fingertips":[[0.3417,0.0491,0.3892],[0.3861,0.0322,0.4461],[0.393,0.0087,0.446],[0.319,-0.0117,0.3818],[0.3097,-0.0326,0.3962]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2784,0.0589,0.4382]],[[0.2784,0.0589,0.4382],[0.3058,0.0537,0.4156]],[[0.3058,0.0537,0.4156],[0.3254,0.0505,0.4003]],[[0.3254,0.0505,0.4003],[0.3415,0.0479,0.3886]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.345,0.0292,0.4491]],[[0.345,0.0292,0.4491],[0.3692,0.0297,0.4476]],[[0.3692,0.0297,0.4476],[0.3872,0.0299,0.4472]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3455,0.007,0.4495]],[[0.3455,0.007,0.4495],[0.3728,0.0076,0.4469]],[[0.3728,0.0076,0.4469],[0.3919,0.0072,0.4461]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3264,-0.013,0.4221]],[[0.3264,-0.013,0.4221],[0.3271,-0.0119,0.397]],[[0.3271,-0.0119,0.397],[0.318,-0.0122,0.3827]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.3174,-0.0335,0.428]],[[0.3174,-0.0335,0.428],[0.318,-0.0349,0.4108]],[[0.318,-0.0349,0.4108],[0.3107,-0.0329,0.396]]]],"fingertips":[[0.3415,0.0479,0.3886],[0.3872,0.0299,0.4472],[0.3919,0.0072,0.4461],[0.318,-0.0122,0.3827],[0.3107,-0.0329,0.396]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2779,0.0585,0.4386]],[[0.2779,0.0585,0.4386],[0.3058,0.0553,0.4158]],[[0.3058,0.0553,0.4158],[0.3233,0.0515,0.4026]],[[0.3233,0.0515,0.4026],[0.3405,0.0493,0.3898]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.3438,0.0298,0.4501]],[[0.3438,0.0298,0.4501],[0.3687,0.0312,0.4486]],[[0.3687,0.0312,0.4486],[0.3875,0.0319,0.4475]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3457,0.008,0.4489]],[[0.3457,0.008,0.4489],[0.373,0.0078,0.4472]],[[0.373,0.0078,0.4472],[0.3913,0.0071,0.4461]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.3271,-0.0116,0.4231]],[[0.3271,-0.0116,0.4231],[0.3274,-0.0122,0.3986]],[[0.3274,-0.0122,0.3986],[0.3175,-0.0115,0.3827]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3169,-0.0328,0.4295]],[[0.3169,-0.0328,0.4295],[0.3179,-0.0339,0.4103]],[[0.3179,-0.0339,0.4103],[0.3084,-0.0323,0.3961]]]],"fingertips":[[0.3405,0.0493,0.3898],[0.3875,0.0319,0.4475],[0.3913,0.0071,0.4461],[0.3175,-0.0115,0.3827],[0.3084,-0.0323,0.3961]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2776,0.0592,0.4377]],[[0.2776,0.0592,0.4377],[0.3052,0.0555,0.4154]],[[0.3052,0.0555,0.4154],[0.3251,0.0515,0.4011]],[[0.3251,0.0515,0.4011],[0.3403,0.0487,0.3877]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3451,0.0288,0.4484]],[[0.3451,0.0288,0.4484],[0.3675,0.0307,0.4463]],[[0.3675,0.0307,0.4463],[0.3863,0.031,0.4442]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3454,0.0072,0.4475]],[[0.3454,0.0072,0.4475],[0.3729,0.008,0.4468]],[[0.3729,0.008,0.4468],[0.391,0.0076,0.4449]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.3268,-0.0119,0.4217]],[[0.3268,-0.0119,0.4217],[0.3267,-0.0128,0.3969]],[[0.3267,-0.0128,0.3969],[0.3175,-0.0122,0.3813]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.3166,-0.0328,0.4278]],[[0.3166,-0.0328,0.4278],[0.317,-0.0329,0.4085]],[[0.317,-0.0329,0.4085],[0.3093,-0.0336,0.395]]]],"fingertips":[[0.3403,0.0487,0.3877],[0.3863,0.031,0.4442],[0.391,0.0076,0.4449],[0.3175,-0.0122,0.3813],[0.3093,-0.0336,0.395]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2776,0.0592,0.437]],[[0.2776,0.0592,0.437],[0.3067,0.0549,0.4145]],[[0.3067,0.0549,0.4145],[0.3243,0.0514,0.4009]],[[0.3243,0.0514,0.4009],[0.341,0.0497,0.3873]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3443,0.0294,0.4486]],[[0.3443,0.0294,0.4486],[0.3689,0.031,0.4484]],[[0.3689,0.031,0.4484],[0.3867,0.032,0.4454]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.3451,0.0065,0.4496]],[[0.3451,0.0065,0.4496],[0.3734,0.0081,0.4461]],[[0.3734,0.0081,0.4461],[0.3913,0.0088,0.4442]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3263,-0.0126,0.4221]],[[0.3263,-0.0126,0.4221],[0.3286,-0.012,0.3975]],[[0.3286,-0.012,0.3975],[0.3181,-0.0122,0.3824]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.3174,-0.0327,0.4275]],[[0.3174,-0.0327,0.4275],[0.318,-0.033,0.4092]],[[0.318,-0.033,0.4092],[0.3095,-0.0323,0.3959]]]],"fingertips":[[0.341,0.0497,0.3873],[0.3867,0.032,0.4454],[0.3913,0.0088,0.4442],[0.3181,-0.0122,0.3824],[0.3095,-0.0323,0.3959]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.2766,0.0589,0.4378]],[[0.2766,0.0589,0.4378],[0.3048,0.0544,0.4148]],[[0.3048,0.0544,0.4148],[0.3245,0.0509,0.4009]],[[0.3245,0.0509,0.4009],[0.3395,0.0495,0.3891]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3431,0.0294,0.4492]],[[0.3431,0.0294,0.4492],[0.368,0.0305,0.4474]],[[0.368,0.0305,0.4474],[0.3855,0.032,0.4474]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3444,0.0078,0.4489]],[[0.3444,0.0078,0.4489],[0.3712,0.0087,0.4479]],[[0.3712,0.0087,0.4479],[0.3908,0.0076,0.4456]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.3247,-0.0124,0.4221]],[[0.3247,-0.0124,0.4221],[0.3263,-0.0128,0.3974]],[[0.3263,-0.0128,0.3974],[0.3171,-0.0118,0.3817]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3162,-0.033,0.4289]],[[0.3162,-0.033,0.4289],[0.3165,-0.0337,0.4096]],[[0.3165,-0.0337,0.4096],[0.308,-0.032,0.3961]]]],"fingertips":[[0.3395,0.0495,0.3891],[0.3855,0.032,0.4474],[0.3908,0.0076,0.4456],[0.3171,-0.0118,0.3817],[0.308,-0.032,0.3961]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.2763,0.0593,0.438]],[[0.2763,0.0593,0.438],[0.3049,0.0549,0.4159]],[[0.3049,0.0549,0.4159],[0.3237,0.0516,0.4009]],[[0.3237,0.0516,0.4009],[0.3396,0.0491,0.389]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3436,0.0296,0.4499]],[[0.3436,0.0296,0.4499],[0.367,0.0313,0.447]],[[0.367,0.0313,0.447],[0.3853,0.0318,0.446]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3447,0.0075,0.4496]],[[0.3447,0.0075,0.4496],[0.3713,0.0087,0.4472]],[[0.3713,0.0087,0.4472],[0.3916,0.0081,0.4463]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3242,-0.0124,0.4228]],[[0.3242,-0.0124,0.4228],[0.3268,-0.0122,0.3973]],[[0.3268,-0.0122,0.3973],[0.3168,-0.012,0.3824]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3153,-0.0337,0.4286]],[[0.3153,-0.0337,0.4286],[0.3161,-0.032,0.4095]],[[0.3161,-0.032,0.4095],[0.3079,-0.0328,0.3956]]]],"fingertips":[[0.3396,0.0491,0.389],[0.3853,0.0318,0.446],[0.3916,0.0081,0.4463],[0.3168,-0.012,0.3824],[0.3079,-0.0328,0.3956]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.278,0.0586,0.438]],[[0.278,0.0586,0.438],[0.3057,0.0548,0.4158]],[[0.3057,0.0548,0.4158],[0.3246,0.0511,0.4011]],[[0.3246,0.0511,0.4011],[0.3398,0.0489,0.388]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3442,0.0297,0.4491]],[[0.3442,0.0297,0.4491],[0.3689,0.0309,0.447]],[[0.3689,0.0309,0.447],[0.3867,0.0321,0.4456]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3455,0.0072,0.4491]],[[0.3455,0.0072,0.4491],[0.3732,0.0089,0.4473]],[[0.3732,0.0089,0.4473],[0.3915,0.0086,0.4466]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3263,-0.0124,0.4212]],[[0.3263,-0.0124,0.4212],[0.327,-0.012,0.3973]],[[0.327,-0.012,0.3973],[0.3178,-0.0116,0.3823]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3166,-0.0336,0.4296]],[[0.3166,-0.0336,0.4296],[0.3174,-0.0333,0.4093]],[[0.3174,-0.0333,0.4093],[0.31,-0.0329,0.3958]]]],"fingertips":[[0.3398,0.0489,0.388],[0.3867,0.0321,0.4456],[0.3915,0.0086,0.4466],[0.3178,-0.0116,0.3823],[0.31,-0.0329,0.3958]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.2772,0.0575,0.438]],[[0.2772,0.0575,0.438],[0.3064,0.0543,0.4151]],[[0.3064,0.0543,0.4151],[0.3247,0.0516,0.4018]],[[0.3247,0.0516,0.4018],[0.3407,0.0491,0.3893]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3442,0.0291,0.4484]],[[0.3442,0.0291,0.4484],[0.3682,0.0308,0.4476]],[[0.3682,0.0308,0.4476],[0.3865,0.0317,0.447]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3453,0.0077,0.449]],[[0.3453,0.0077,0.449],[0.3714,0.0082,0.4471]],[[0.3714,0.0082,0.4471],[0.3912,0.0076,0.4465]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3247,-0.0121,0.4234]],[[0.3247,-0.0121,0.4234],[0.3278,-0.0126,0.3978]],[[0.3278,-0.0126,0.3978],[0.3179,-0.0128,0.3822]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3177,-0.0337,0.4293]],[[0.3177,-0.0337,0.4293],[0.3182,-0.0336,0.4094]],[[0.3182,-0.0336,0.4094],[0.3095,-0.0325,0.3958]]]],"fingertips":[[0.3407,0.0491,0.3893],[0.3865,0.0317,0.447],[0.3912,0.0076,0.4465],[0.3179,-0.0128,0.3822],[0.3095,-0.0325,0.3958]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2784,0.0598,0.4379]],[[0.2784,0.0598,0.4379],[0.3072,0.0543,0.4149]],[[0.3072,0.0543,0.4149],[0.3255,0.0519,0.4005]],[[0.3255,0.0519,0.4005],[0.3413,0.0492,0.3891]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.346,0.0299,0.4492]],[[0.346,0.0299,0.4492],[0.3695,0.0305,0.4477]],[[0.3695,0.0305,0.4477],[0.3874,0.0325,0.4469]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3474,0.0083,0.4484]],[[0.3474,0.0083,0.4484],[0.3729,0.0079,0.447]],[[0.3729,0.0079,0.447],[0.3927,0.0084,0.4469]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.328,-0.0108,0.4232]],[[0.328,-0.0108,0.4232],[0.3292,-0.0111,0.397]],[[0.3292,-0.0111,0.397],[0.3194,-0.0117,0.3831]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3182,-0.0326,0.4288]],[[0.3182,-0.0326,0.4288],[0.3183,-0.0323,0.4099]],[[0.3183,-0.0323,0.4099],[0.3104,-0.0319,0.3959]]]],"fingertips":[[0.3413,0.0492,0.3891],[0.3874,0.0325,0.4469],[0.3927,0.0084,0.4469],[0.3194,-0.0117,0.3831],[0.3104,-0.0319,0.3959]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2783,0.0583,0.4377]],[[0.2783,0.0583,0.4377],[0.3067,0.055,0.4156]],[[0.3067,0.055,0.4156],[0.3244,0.0522,0.4004]],[[0.3244,0.0522,0.4004],[0.341,0.0484,0.3889]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3443,0.0299,0.449]],[[0.3443,0.0299,0.449],[0.3688,0.0309,0.4478]],[[0.3688,0.0309,0.4478],[0.387,0.0325,0.4462]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3464,0.0076,0.4485]],[[0.3464,0.0076,0.4485],[0.3726,0.0079,0.447]],[[0.3726,0.0079,0.447],[0.392,0.008,0.446]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.3267,-0.0125,0.422]],[[0.3267,-0.0125,0.422],[0.3273,-0.0123,0.3969]],[[0.3273,-0.0123,0.3969],[0.318,-0.0113,0.3818]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.3174,-0.0327,0.4285]],[[0.3174,-0.0327,0.4285],[0.3182,-0.0339,0.409]],[[0.3182,-0.0339,0.409],[0.3096,-0.0321,0.3956]]]],"fingertips":[[0.341,0.0484,0.3889],[0.387,0.0325,0.4462],[0.392,0.008,0.446],[0.318,-0.0113,0.3818],[0.3096,-0.0321,0.3956]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.278,0.0597,0.4378]],[[0.278,0.0597,0.4378],[0.3066,0.0547,0.4156]],[[0.3066,0.0547,0.4156],[0.3256,0.0525,0.4011]],[[0.3256,0.0525,0.4011],[0.3412,0.05,0.3892]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3455,0.0304,0.4494]],[[0.3455,0.0304,0.4494],[0.3691,0.0315,0.4476]],[[0.3691,0.0315,0.4476],[0.3871,0.0314,0.4467]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.3461,0.0083,0.4491]],[[0.3461,0.0083,0.4491],[0.374,0.0088,0.4481]],[[0.374,0.0088,0.4481],[0.3915,0.0088,0.4457]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3262,-0.0117,0.4235]],[[0.3262,-0.0117,0.4235],[0.3286,-0.0124,0.3975]],[[0.3286,-0.0124,0.3975],[0.318,-0.0117,0.3821]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3169,-0.0318,0.4284]],[[0.3169,-0.0318,0.4284],[0.318,-0.0324,0.4109]],[[0.318,-0.0324,0.4109],[0.3096,-0.0317,0.397]]]],"fingertips":[[0.3412,0.05,0.3892],[0.3871,0.0314,0.4467],[0.3915,0.0088,0.4457],[0.318,-0.0117,0.3821],[0.3096,-0.0317,0.397]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2777,0.0589,0.4376]],[[0.2777,0.0589,0.4376],[0.306,0.0541,0.4159]],[[0.306,0.0541,0.4159],[0.3248,0.0514,0.4006]],[[0.3248,0.0514,0.4006],[0.3406,0.0485,0.389]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3448,0.0288,0.4488]],[[0.3448,0.0288,0.4488],[0.3682,0.0316,0.447]],[[0.3682,0.0316,0.447],[0.3864,0.0303,0.4459]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3453,0.0076,0.4484]],[[0.3453,0.0076,0.4484],[0.3732,0.0072,0.4473]],[[0.3732,0.0072,0.4473],[0.3919,0.0067,0.445]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3274,-0.0133,0.4219]],[[0.3274,-0.0133,0.4219],[0.327,-0.0132,0.397]],[[0.327,-0.0132,0.397],[0.3182,-0.0126,0.3815]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3171,-0.0342,0.4289]],[[0.3171,-0.0342,0.4289],[0.3173,-0.0347,0.4089]],[[0.3173,-0.0347,0.4089],[0.3097,-0.0338,0.3964]]]],"fingertips":[[0.3406,0.0485,0.389],[0.3864,0.0303,0.4459],[0.3919,0.0067,0.445],[0.3182,-0.0126,0.3815],[0.3097,-0.0338,0.3964]]}],"three":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2788,0.0581,0.4377]],[[0.2788,0.0581,0.4377],[0.3075,0.0539,0.4163]],[[0.3075,0.0539,0.4163],[0.3251,0.0518,0.4012]],[[0.3251,0.0518,0.4012],[0.342,0.0486,0.3889]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.345,0.0292,0.449]],[[0.345,0.0292,0.449],[0.3687,0.0297,0.4478]],[[0.3687,0.0297,0.4478],[0.387,0.0303,0.4467]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.3472,0.0077,0.4492]],[[0.3472,0.0077,0.4492],[0.3734,0.0074,0.4479]],[[0.3734,0.0074,0.4479],[0.3933,0.0066,0.446]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3392,-0.013,0.4496]],[[0.3392,-0.013,0.4496],[0.3642,-0.015,0.4483]],[[0.3642,-0.015,0.4483],[0.382,-0.0159,0.4468]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3183,-0.0339,0.4292]],[[0.3183,-0.0339,0.4292],[0.3185,-0.0334,0.4103]],[[0.3185,-0.0334,0.4103],[0.3103,-0.0328,0.397]]]],"fingertips":[[0.342,0.0486,0.3889],[0.387,0.0303,0.4467],[0.3933,0.0066,0.446],[0.382,-0.0159,0.4468],[0.3103,-0.0328,0.397]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.2792,0.0591,0.4385]],[[0.2792,0.0591,0.4385],[0.3061,0.0557,0.4173]],[[0.3061,0.0557,0.4173],[0.3265,0.0518,0.4016]],[[0.3265,0.0518,0.4016],[0.3415,0.0511,0.3899]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3454,0.0306,0.4499]],[[0.3454,0.0306,0.4499],[0.3685,0.0316,0.4493]],[[0.3685,0.0316,0.4493],[0.387,0.032,0.448]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3476,0.0085,0.4496]],[[0.3476,0.0085,0.4496],[0.3736,0.0085,0.4483]],[[0.3736,0.0085,0.4483],[0.3921,0.009,0.4475]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3387,-0.0119,0.4503]],[[0.3387,-0.0119,0.4503],[0.3635,-0.0119,0.449]],[[0.3635,-0.0119,0.449],[0.3817,-0.0134,0.4469]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3173,-0.0331,0.4296]],[[0.3173,-0.0331,0.4296],[0.3184,-0.0316,0.4109]],[[0.3184,-0.0316,0.4109],[0.3095,-0.0318,0.398]]]],"fingertips":[[0.3415,0.0511,0.3899],[0.387,0.032,0.448],[0.3921,0.009,0.4475],[0.3817,-0.0134,0.4469],[0.3095,-0.0318,0.398]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.2785,0.0581,0.4376]],[[0.2785,0.0581,0.4376],[0.3062,0.0545,0.4154]],[[0.3062,0.0545,0.4154],[0.3257,0.052,0.4012]],[[0.3257,0.052,0.4012],[0.3411,0.0492,0.3885]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3455,0.0291,0.4487]],[[0.3455,0.0291,0.4487],[0.3689,0.0304,0.4479]],[[0.3689,0.0304,0.4479],[0.3867,0.0311,0.446]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3454,0.008,0.4492]],[[0.3454,0.008,0.4492],[0.3724,0.0079,0.448]],[[0.3724,0.0079,0.448],[0.3923,0.0079,0.4466]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.3379,-0.0133,0.4493]],[[0.3379,-0.0133,0.4493],[0.3639,-0.0132,0.4475]],[[0.3639,-0.0132,0.4475],[0.3814,-0.0147,0.4463]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.3166,-0.0337,0.4291]],[[0.3166,-0.0337,0.4291],[0.3189,-0.0333,0.4102]],[[0.3189,-0.0333,0.4102],[0.3096,-0.0335,0.3962]]]],"fingertips":[[0.3411,0.0492,0.3885],[0.3867,0.0311,0.446],[0.3923,0.0079,0.4466],[0.3814,-0.0147,0.4463],[0.3096,-0.0335,0.3962]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2787,0.0599,0.4378]],[[0.2787,0.0599,0.4378],[0.3067,0.0551,0.4163]],[[0.3067,0.0551,0.4163],[0.3256,0.0516,0.4016]],[[0.3256,0.0516,0.4016],[0.3418,0.0498,0.3887]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3451,0.0297,0.4487]],[[0.3451,0.0297,0.4487],[0.3694,0.0311,0.4475]],[[0.3694,0.0311,0.4475],[0.387,0.0316,0.4457]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3459,0.0086,0.4493]],[[0.3459,0.0086,0.4493],[0.3731,0.0082,0.4472]],[[0.3731,0.0082,0.4472],[0.3915,0.0087,0.4465]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.3371,-0.0119,0.4491]],[[0.3371,-0.0119,0.4491],[0.3621,-0.0136,0.4478]],[[0.3621,-0.0136,0.4478],[0.3809,-0.0148,0.4468]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.3165,-0.0328,0.4289]],[[0.3165,-0.0328,0.4289],[0.3187,-0.0335,0.4101]],[[0.3187,-0.0335,0.4101],[0.3109,-0.0328,0.3959]]]],"fingertips":[[0.3418,0.0498,0.3887],[0.387,0.0316,0.4457],[0.3915,0.0087,0.4465],[0.3809,-0.0148,0.4468],[0.3109,-0.0328,0.3959]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2783,0.0588,0.4375]],[[0.2783,0.0588,0.4375],[0.3065,0.0559,0.4156]],[[0.3065,0.0559,0.4156],[0.3258,0.0521,0.4005]],[[0.3258,0.0521,0.4005],[0.3412,0.0502,0.3885]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3448,0.0285,0.4491]],[[0.3448,0.0285,0.4491],[0.3693,0.031,0.4478]],[[0.3693,0.031,0.4478],[0.3872,0.0322,0.4447]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.3451,0.0085,0.4485]],[[0.3451,0.0085,0.4485],[0.3736,0.0081,0.4471]],[[0.3736,0.0081,0.4471],[0.3914,0.0084,0.4453]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3384,-0.0126,0.4483]],[[0.3384,-0.0126,0.4483],[0.3639,-0.0134,0.4477]],[[0.3639,-0.0134,0.4477],[0.3812,-0.0143,0.4455]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3181,-0.034,0.4284]],[[0.3181,-0.034,0.4284],[0.3178,-0.0327,0.4089]],[[0.3178,-0.0327,0.4089],[0.3099,-0.0314,0.3957]]]],"fingertips":[[0.3412,0.0502,0.3885],[0.3872,0.0322,0.4447],[0.3914,0.0084,0.4453],[0.3812,-0.0143,0.4455],[0.3099,-0.0314,0.3957]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.2776,0.0593,0.4381]],[[0.2776,0.0593,0.4381],[0.3062,0.0558,0.4156]],[[0.3062,0.0558,0.4156],[0.3244,0.0521,0.4005]],[[0.3244,0.0521,0.4005],[0.3406,0.05,0.3877]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3442,0.0294,0.4491]],[[0.3442,0.0294,0.4491],[0.3693,0.0307,0.4483]],[[0.3693,0.0307,0.4483],[0.3858,0.0321,0.446]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.3452,0.009,0.4477]],[[0.3452,0.009,0.4477],[0.3721,0.0086,0.4477]],[[0.3721,0.0086,0.4477],[0.3919,0.0083,0.4454]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3372,-0.0117,0.4478]],[[0.3372,-0.0117,0.4478],[0.3622,-0.0135,0.4486]],[[0.3622,-0.0135,0.4486],[0.3805,-0.0137,0.4459]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3157,-0.0321,0.429]],[[0.3157,-0.0321,0.429],[0.3174,-0.0326,0.4097]],[[0.3174,-0.0326,0.4097],[0.3081,-0.0318,0.3963]]]],"fingertips":[[0.3406,0.05,0.3877],[0.3858,0.0321,0.446],[0.3919,0.0083,0.4454],[0.3805,-0.0137,0.4459],[0.3081,-0.0318,0.3963]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.277,0.0588,0.4373]],[[0.277,0.0588,0.4373],[0.3054,0.0549,0.4157]],[[0.3054,0.0549,0.4157],[0.3241,0.0508,0.4015]],[[0.3241,0.0508,0.4015],[0.3403,0.0488,0.3888]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3444,0.0297,0.4491]],[[0.3444,0.0297,0.4491],[0.3685,0.0304,0.4476]],[[0.3685,0.0304,0.4476],[0.3862,0.0314,0.4468]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3458,0.0081,0.4493]],[[0.3458,0.0081,0.4493],[0.3714,0.0072,0.4472]],[[0.3714,0.0072,0.4472],[0.3906,0.0081,0.4461]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3373,-0.0127,0.4495]],[[0.3373,-0.0127,0.4495],[0.3614,-0.0142,0.4477]],[[0.3614,-0.0142,0.4477],[0.3793,-0.0149,0.4468]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.3165,-0.0328,0.4284]],[[0.3165,-0.0328,0.4284],[0.3168,-0.0335,0.4099]],[[0.3168,-0.0335,0.4099],[0.3089,-0.0327,0.3963]]]],"fingertips":[[0.3403,0.0488,0.3888],[0.3862,0.0314,0.4468],[0.3906,0.0081,0.4461],[0.3793,-0.0149,0.4468],[0.3089,-0.0327,0.3963]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.2785,0.061,0.4372]],[[0.2785,0.061,0.4372],[0.3072,0.056,0.4147]],[[0.3072,0.056,0.4147],[0.3252,0.0525,0.401]],[[0.3252,0.0525,0.401],[0.3404,0.0512,0.3887]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3452,0.03,0.4489]],[[0.3452,0.03,0.4489],[0.3681,0.0308,0.4476]],[[0.3681,0.0308,0.4476],[0.3881,0.0327,0.4464]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3463,0.0084,0.4494]],[[0.3463,0.0084,0.4494],[0.3741,0.0087,0.448]],[[0.3741,0.0087,0.448],[0.3921,0.0091,0.4464]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3373,-0.0108,0.4482]],[[0.3373,-0.0108,0.4482],[0.3631,-0.0129,0.4472]],[[0.3631,-0.0129,0.4472],[0.3803,-0.0123,0.4455]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.3175,-0.0317,0.4281]],[[0.3175,-0.0317,0.4281],[0.3182,-0.0322,0.4095]],[[0.3182,-0.0322,0.4095],[0.3096,-0.0315,0.3957]]]],"fingertips":[[0.3404,0.0512,0.3887],[0.3881,0.0327,0.4464],[0.3921,0.0091,0.4464],[0.3803,-0.0123,0.4455],[0.3096,-0.0315,0.3957]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2798,0.0597,0.4382]],[[0.2798,0.0597,0.4382],[0.3066,0.054,0.4144]],[[0.3066,0.054,0.4144],[0.326,0.0524,0.4002]],[[0.326,0.0524,0.4002],[0.3417,0.0491,0.3892]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.3446,0.0306,0.449]],[[0.3446,0.0306,0.449],[0.3689,0.031,0.4478]],[[0.3689,0.031,0.4478],[0.3861,0.0322,0.4461]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.3472,0.0084,0.4484]],[[0.3472,0.0084,0.4484],[0.3733,0.0081,0.4472]],[[0.3733,0.0081,0.4472],[0.393,0.0087,0.446]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3395,-0.0118,0.4489]],[[0.3395,-0.0118,0.4489],[0.3642,-0.013,0.4471]],[[0.3642,-0.013,0.4471],[0.3815,-0.0142,0.446]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3171,-0.0328,0.4296]],[[0.3171,-0.0328,0.4296],[0.3179,-0.0319,0.4102]],[[0.3179,-0.0319,0.4102],[0.3097,-0.0326,0.3962]]]],"fingertips":[[0.3417,0.0491,0.3892],[0.3861,0.0322,0.4461],[0.393,0.0087,0.446],[0.3815,-0.0142,0.446],[0.3097,-0.0326,0.3962]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2784,0.0589,0.4382]],[[0.2784,0.0589,0.4382],[0.3058,0.0537,0.4156]],[[0.3058,0.0537,0.4156],[0.3254,0.0505,0.4003]],[[0.3254,0.0505,0.4003],[0.3415,0.0479,0.3886]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.345,0.0292,0.4491]],[[0.345,0.0292,0.4491],[0.3692,0.0297,0.4476]],[[0.3692,0.0297,0.4476],[0.3872,0.0299,0.4472]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3455,0.007,0.4495]],[[0.3455,0.007,0.4495],[0.3728,0.0076,0.4469]],[[0.3728,0.0076,0.4469],[0.3919,0.0072,0.4461]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3375,-0.0134,0.4487]],[[0.3375,-0.0134,0.4487],[0.3622,-0.0133,0.4473]],[[0.3622,-0.0133,0.4473],[0.3805,-0.0147,0.4469]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.3174,-0.0335,0.428]],[[0.3174,-0.0335,0.428],[0.318,-0.0349,0.4108]],[[0.318,-0.0349,0.4108],[0.3107,-0.0329,0.396]]]],"fingertips":[[0.3415,0.0479,0.3886],[0.3872,0.0299,0.4472],[0.3919,0.0072,0.4461],[0.3805,-0.0147,0.4469],[0.3107,-0.0329,0.396]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2779,0.0585,0.4386]],[[0.2779,0.0585,0.4386],[0.3058,0.0553,0.4158]],[[0.3058,0.0553,0.4158],[0.3233,0.0515,0.4026]],[[0.3233,0.0515,0.4026],[0.3405,0.0493,0.3898]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.3438,0.0298,0.4501]],[[0.3438,0.0298,0.4501],[0.3687,0.0312,0.4486]],[[0.3687,0.0312,0.4486],[0.3875,0.0319,0.4475]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3457,0.008,0.4489]],[[0.3457,0.008,0.4489],[0.373,0.0078,0.4472]],[[0.373,0.0078,0.4472],[0.3913,0.0071,0.4461]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.3382,-0.0121,0.4497]],[[0.3382,-0.0121,0.4497],[0.3624,-0.0136,0.4488]],[[0.3624,-0.0136,0.4488],[0.38,-0.014,0.4469]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3169,-0.0328,0.4295]],[[0.3169,-0.0328,0.4295],[0.3179,-0.0339,0.4103]],[[0.3179,-0.0339,0.4103],[0.3084,-0.0323,0.3961]]]],"fingertips":[[0.3405,0.0493,0.3898],[0.3875,0.0319,0.4475],[0.3913,0.0071,0.4461],[0.38,-0.014,0.4469],[0.3084,-0.0323,0.3961]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2776,0.0592,0.4377]],[[0.2776,0.0592,0.4377],[0.3052,0.0555,0.4154]],[[0.3052,0.0555,0.4154],[0.3251,0.0515,0.4011]],[[0.3251,0.0515,0.4011],[0.3403,0.0487,0.3877]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3451,0.0288,0.4484]],[[0.3451,0.0288,0.4484],[0.3675,0.0307,0.4463]],[[0.3675,0.0307,0.4463],[0.3863,0.031,0.4442]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3454,0.0072,0.4475]],[[0.3454,0.0072,0.4475],[0.3729,0.008,0.4468]],[[0.3729,0.008,0.4468],[0.391,0.0076,0.4449]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.3379,-0.0124,0.4483]],[[0.3379,-0.0124,0.4483],[0.3618,-0.0142,0.4471]],[[0.3618,-0.0142,0.4471],[0.3799,-0.0147,0.4455]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.3166,-0.0328,0.4278]],[[0.3166,-0.0328,0.4278],[0.317,-0.0329,0.4085]],[[0.317,-0.0329,0.4085],[0.3093,-0.0336,0.395]]]],"fingertips":[[0.3403,0.0487,0.3877],[0.3863,0.031,0.4442],[0.391,0.0076,0.4449],[0.3799,-0.0147,0.4455],[0.3093,-0.0336,0.395]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2776,0.0592,0.437]],[[0.2776,0.0592,0.437],[0.3067,0.0549,0.4145]],[[0.3067,0.0549,0.4145],[0.3243,0.0514,0.4009]],[[0.3243,0.0514,0.4009],[0.341,0.0497,0.3873]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3443,0.0294,0.4486]],[[0.3443,0.0294,0.4486],[0.3689,0.031,0.4484]],[[0.3689,0.031,0.4484],[0.3867,0.032,0.4454]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.3451,0.0065,0.4496]],[[0.3451,0.0065,0.4496],[0.3734,0.0081,0.4461]],[[0.3734,0.0081,0.4461],[0.3913,0.0088,0.4442]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3375,-0.0131,0.4487]],[[0.3375,-0.0131,0.4487],[0.3636,-0.0134,0.4477]],[[0.3636,-0.0134,0.4477],[0.3806,-0.0147,0.4466]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.3174,-0.0327,0.4275]],[[0.3174,-0.0327,0.4275],[0.318,-0.033,0.4092]],[[0.318,-0.033,0.4092],[0.3095,-0.0323,0.3959]]]],"fingertips":[[0.341,0.0497,0.3873],[0.3867,0.032,0.4454],[0.3913,0.0088,0.4442],[0.3806,-0.0147,0.4466],[0.3095,-0.0323,0.3959]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.2766,0.0589,0.4378]],[[0.2766,0.0589,0.4378],[0.3048,0.0544,0.4148]],[[0.3048,0.0544,0.4148],[0.3245,0.0509,0.4009]],[[0.3245,0.0509,0.4009],[0.3395,0.0495,0.3891]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3431,0.0294,0.4492]],[[0.3431,0.0294,0.4492],[0.368,0.0305,0.4474]],[[0.368,0.0305,0.4474],[0.3855,0.032,0.4474]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3444,0.0078,0.4489]],[[0.3444,0.0078,0.4489],[0.3712,0.0087,0.4479]],[[0.3712,0.0087,0.4479],[0.3908,0.0076,0.4456]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.3359,-0.0129,0.4488]],[[0.3359,-0.0129,0.4488],[0.3614,-0.0142,0.4477]],[[0.3614,-0.0142,0.4477],[0.3796,-0.0143,0.4459]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3162,-0.033,0.4289]],[[0.3162,-0.033,0.4289],[0.3165,-0.0337,0.4096]],[[0.3165,-0.0337,0.4096],[0.308,-0.032,0.3961]]]],"fingertips":[[0.3395,0.0495,0.3891],[0.3855,0.032,0.4474],[0.3908,0.0076,0.4456],[0.3796,-0.0143,0.4459],[0.308,-0.032,0.3961]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.2763,0.0593,0.438]],[[0.2763,0.0593,0.438],[0.3049,0.0549,0.4159]],[[0.3049,0.0549,0.4159],[0.3237,0.0516,0.4009]],[[0.3237,0.0516,0.4009],[0.3396,0.0491,0.389]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3436,0.0296,0.4499]],[[0.3436,0.0296,0.4499],[0.367,0.0313,0.447]],[[0.367,0.0313,0.447],[0.3853,0.0318,0.446]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3447,0.0075,0.4496]],[[0.3447,0.0075,0.4496],[0.3713,0.0087,0.4472]],[[0.3713,0.0087,0.4472],[0.3916,0.0081,0.4463]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3353,-0.0128,0.4495]],[[0.3353,-0.0128,0.4495],[0.3618,-0.0136,0.4475]],[[0.3618,-0.0136,0.4475],[0.3792,-0.0145,0.4466]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3153,-0.0337,0.4286]],[[0.3153,-0.0337,0.4286],[0.3161,-0.032,0.4095]],[[0.3161,-0.032,0.4095],[0.3079,-0.0328,0.3956]]]],"fingertips":[[0.3396,0.0491,0.389],[0.3853,0.0318,0.446],[0.3916,0.0081,0.4463],[0.3792,-0.0145,0.4466],[0.3079,-0.0328,0.3956]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.278,0.0586,0.438]],[[0.278,0.0586,0.438],[0.3057,0.0548,0.4158]],[[0.3057,0.0548,0.4158],[0.3246,0.0511,0.4011]],[[0.3246,0.0511,0.4011],[0.3398,0.0489,0.388]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3442,0.0297,0.4491]],[[0.3442,0.0297,0.4491],[0.3689,0.0309,0.447]],[[0.3689,0.0309,0.447],[0.3867,0.0321,0.4456]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3455,0.0072,0.4491]],[[0.3455,0.0072,0.4491],[0.3732,0.0089,0.4473]],[[0.3732,0.0089,0.4473],[0.3915,0.0086,0.4466]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3375,-0.0128,0.4478]],[[0.3375,-0.0128,0.4478],[0.362,-0.0134,0.4475]],[[0.362,-0.0134,0.4475],[0.3802,-0.0141,0.4465]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3166,-0.0336,0.4296]],[[0.3166,-0.0336,0.4296],[0.3174,-0.0333,0.4093]],[[0.3174,-0.0333,0.4093],[0.31,-0.0329,0.3958]]]],"fingertips":[[0.3398,0.0489,0.388],[0.3867,0.0321,0.4456],[0.3915,0.0086,0.4466],[0.3802,-0.0141,0.4465],[0.31,-0.0329,0.3958]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.2772,0.0575,0.438]],[[0.2772,0.0575,0.438],[0.3064,0.0543,0.4151]],[[0.3064,0.0543,0.4151],[0.3247,0.0516,0.4018]],[[0.3247,0.0516,0.4018],[0.3407,0.0491,0.3893]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3442,0.0291,0.4484]],[[0.3442,0.0291,0.4484],[0.3682,0.0308,0.4476]],[[0.3682,0.0308,0.4476],[0.3865,0.0317,0.447]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3453,0.0077,0.449]],[[0.3453,0.0077,0.449],[0.3714,0.0082,0.4471]],[[0.3714,0.0082,0.4471],[0.3912,0.0076,0.4465]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3358,-0.0126,0.4501]],[[0.3358,-0.0126,0.4501],[0.3629,-0.014,0.448]],[[0.3629,-0.014,0.448],[0.3804,-0.0153,0.4464]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3177,-0.0337,0.4293]],[[0.3177,-0.0337,0.4293],[0.3182,-0.0336,0.4094]],[[0.3182,-0.0336,0.4094],[0.3095,-0.0325,0.3958]]]],"fingertips":[[0.3407,0.0491,0.3893],[0.3865,0.0317,0.447],[0.3912,0.0076,0.4465],[0.3804,-0.0153,0.4464],[0.3095,-0.0325,0.3958]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2784,0.0598,0.4379]],[[0.2784,0.0598,0.4379],[0.3072,0.0543,0.4149]],[[0.3072,0.0543,0.4149],[0.3255,0.0519,0.4005]],[[0.3255,0.0519,0.4005],[0.3413,0.0492,0.3891]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.346,0.0299,0.4492]],[[0.346,0.0299,0.4492],[0.3695,0.0305,0.4477]],[[0.3695,0.0305,0.4477],[0.3874,0.0325,0.4469]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3474,0.0083,0.4484]],[[0.3474,0.0083,0.4484],[0.3729,0.0079,0.447]],[[0.3729,0.0079,0.447],[0.3927,0.0084,0.4469]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.3392,-0.0112,0.4498]],[[0.3392,-0.0112,0.4498],[0.3642,-0.0125,0.4472]],[[0.3642,-0.0125,0.4472],[0.3818,-0.0142,0.4473]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3182,-0.0326,0.4288]],[[0.3182,-0.0326,0.4288],[0.3183,-0.0323,0.4099]],[[0.3183,-0.0323,0.4099],[0.3104,-0.0319,0.3959]]]],"fingertips":[[0.3413,0.0492,0.3891],[0.3874,0.0325,0.4469],[0.3927,0.0084,0.4469],[0.3818,-0.0142,0.4473],[0.3104,-0.0319,0.3959]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2783,0.0583,0.4377]],[[0.2783,0.0583,0.4377],[0.3067,0.055,0.4156]],[[0.3067,0.055,0.4156],[0.3244,0.0522,0.4004]],[[0.3244,0.0522,0.4004],[0.341,0.0484,0.3889]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3443,0.0299,0.449]],[[0.3443,0.0299,0.449],[0.3688,0.0309,0.4478]],[[0.3688,0.0309,0.4478],[0.387,0.0325,0.4462]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3464,0.0076,0.4485]],[[0.3464,0.0076,0.4485],[0.3726,0.0079,0.447]],[[0.3726,0.0079,0.447],[0.392,0.008,0.446]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.3378,-0.0129,0.4486]],[[0.3378,-0.0129,0.4486],[0.3624,-0.0137,0.4472]],[[0.3624,-0.0137,0.4472],[0.3805,-0.0138,0.4461]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.3174,-0.0327,0.4285]],[[0.3174,-0.0327,0.4285],[0.3182,-0.0339,0.409]],[[0.3182,-0.0339,0.409],[0.3096,-0.0321,0.3956]]]],"fingertips":[[0.341,0.0484,0.3889],[0.387,0.0325,0.4462],[0.392,0.008,0.446],[0.3805,-0.0138,0.4461],[0.3096,-0.0321,0.3956]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.278,0.0597,0.4378]],[[0.278,0.0597,0.4378],[0.3066,0.0547,0.4156]],[[0.3066,0.0547,0.4156],[0.3256,0.0525,0.4011]],[[0.3256,0.0525,0.4011],[0.3412,0.05,0.3892]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3455,0.0304,0.4494]],[[0.3455,0.0304,0.4494],[0.3691,0.0315,0.4476]],[[0.3691,0.0315,0.4476],[0.3871,0.0314,0.4467]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.3461,0.0083,0.4491]],[[0.3461,0.0083,0.4491],[0.374,0.0088,0.4481]],[[0.374,0.0088,0.4481],[0.3915,0.0088,0.4457]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3373,-0.0121,0.4501]],[[0.3373,-0.0121,0.4501],[0.3637,-0.0138,0.4478]],[[0.3637,-0.0138,0.4478],[0.3805,-0.0142,0.4464]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3169,-0.0318,0.4284]],[[0.3169,-0.0318,0.4284],[0.318,-0.0324,0.4109]],[[0.318,-0.0324,0.4109],[0.3096,-0.0317,0.397]]]],"fingertips":[[0.3412,0.05,0.3892],[0.3871,0.0314,0.4467],[0.3915,0.0088,0.4457],[0.3805,-0.0142,0.4464],[0.3096,-0.0317,0.397]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2777,0.0589,0.4376]],[[0.2777,0.0589,0.4376],[0.306,0.0541,0.4159]],[[0.306,0.0541,0.4159],[0.3248,0.0514,0.4006]],[[0.3248,0.0514,0.4006],[0.3406,0.0485,0.389]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3448,0.0288,0.4488]],[[0.3448,0.0288,0.4488],[0.3682,0.0316,0.447]],[[0.3682,0.0316,0.447],[0.3864,0.0303,0.4459]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3453,0.0076,0.4484]],[[0.3453,0.0076,0.4484],[0.3732,0.0072,0.4473]],[[0.3732,0.0072,0.4473],[0.3919,0.0067,0.445]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3385,-0.0137,0.4485]],[[0.3385,-0.0137,0.4485],[0.362,-0.0146,0.4472]],[[0.362,-0.0146,0.4472],[0.3806,-0.0151,0.4457]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3171,-0.0342,0.4289]],[[0.3171,-0.0342,0.4289],[0.3173,-0.0347,0.4089]],[[0.3173,-0.0347,0.4089],[0.3097,-0.0338,0.3964]]]],"fingertips":[[0.3406,0.0485,0.389],[0.3864,0.0303,0.4459],[0.3919,0.0067,0.445],[0.3806,-0.0151,0.4457],[0.3097,-0.0338,0.3964]]}],"four":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2788,0.0581,0.4377]],[[0.2788,0.0581,0.4377],[0.3075,0.0539,0.4163]],[[0.3075,0.0539,0.4163],[0.3251,0.0518,0.4012]],[[0.3251,0.0518,0.4012],[0.342,0.0486,0.3889]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.345,0.0292,0.449]],[[0.345,0.0292,0.449],[0.3687,0.0297,0.4478]],[[0.3687,0.0297,0.4478],[0.387,0.0303,0.4467]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.3472,0.0077,0.4492]],[[0.3472,0.0077,0.4492],[0.3734,0.0074,0.4479]],[[0.3734,0.0074,0.4479],[0.3933,0.0066,0.446]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3392,-0.013,0.4496]],[[0.3392,-0.013,0.4496],[0.3642,-0.015,0.4483]],[[0.3642,-0.015,0.4483],[0.382,-0.0159,0.4468]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3269,-0.0346,0.4496]],[[0.3269,-0.0346,0.4496],[0.3452,-0.0358,0.4483]],[[0.3452,-0.0358,0.4483],[0.3612,-0.0374,0.447]]]],"fingertips":[[0.342,0.0486,0.3889],[0.387,0.0303,0.4467],[0.3933,0.0066,0.446],[0.382,-0.0159,0.4468],[0.3612,-0.0374,0.447]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.2792,0.0591,0.4385]],[[0.2792,0.0591,0.4385],[0.3061,0.0557,0.4173]],[[0.3061,0.0557,0.4173],[0.3265,0.0518,0.4016]],[[0.3265,0.0518,0.4016],[0.3415,0.0511,0.3899]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3454,0.0306,0.4499]],[[0.3454,0.0306,0.4499],[0.3685,0.0316,0.4493]],[[0.3685,0.0316,0.4493],[0.387,0.032,0.448]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3476,0.0085,0.4496]],[[0.3476,0.0085,0.4496],[0.3736,0.0085,0.4483]],[[0.3736,0.0085,0.4483],[0.3921,0.009,0.4475]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3387,-0.0119,0.4503]],[[0.3387,-0.0119,0.4503],[0.3635,-0.0119,0.449]],[[0.3635,-0.0119,0.449],[0.3817,-0.0134,0.4469]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3259,-0.0339,0.4499]],[[0.3259,-0.0339,0.4499],[0.345,-0.0341,0.4489]],[[0.345,-0.0341,0.4489],[0.3605,-0.0364,0.448]]]],"fingertips":[[0.3415,0.0511,0.3899],[0.387,0.032,0.448],[0.3921,0.009,0.4475],[0.3817,-0.0134,0.4469],[0.3605,-0.0364,0.448]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.2785,0.0581,0.4376]],[[0.2785,0.0581,0.4376],[0.3062,0.0545,0.4154]],[[0.3062,0.0545,0.4154],[0.3257,0.052,0.4012]],[[0.3257,0.052,0.4012],[0.3411,0.0492,0.3885]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3455,0.0291,0.4487]],[[0.3455,0.0291,0.4487],[0.3689,0.0304,0.4479]],[[0.3689,0.0304,0.4479],[0.3867,0.0311,0.446]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3454,0.008,0.4492]],[[0.3454,0.008,0.4492],[0.3724,0.0079,0.448]],[[0.3724,0.0079,0.448],[0.3923,0.0079,0.4466]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.3379,-0.0133,0.4493]],[[0.3379,-0.0133,0.4493],[0.3639,-0.0132,0.4475]],[[0.3639,-0.0132,0.4475],[0.3814,-0.0147,0.4463]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.3251,-0.0345,0.4494]],[[0.3251,-0.0345,0.4494],[0.3456,-0.0357,0.4482]],[[0.3456,-0.0357,0.4482],[0.3605,-0.0381,0.4461]]]],"fingertips":[[0.3411,0.0492,0.3885],[0.3867,0.0311,0.446],[0.3923,0.0079,0.4466],[0.3814,-0.0147,0.4463],[0.3605,-0.0381,0.4461]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2787,0.0599,0.4378]],[[0.2787,0.0599,0.4378],[0.3067,0.0551,0.4163]],[[0.3067,0.0551,0.4163],[0.3256,0.0516,0.4016]],[[0.3256,0.0516,0.4016],[0.3418,0.0498,0.3887]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3451,0.0297,0.4487]],[[0.3451,0.0297,0.4487],[0.3694,0.0311,0.4475]],[[0.3694,0.0311,0.4475],[0.387,0.0316,0.4457]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3459,0.0086,0.4493]],[[0.3459,0.0086,0.4493],[0.3731,0.0082,0.4472]],[[0.3731,0.0082,0.4472],[0.3915,0.0087,0.4465]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.3371,-0.0119,0.4491]],[[0.3371,-0.0119,0.4491],[0.3621,-0.0136,0.4478]],[[0.3621,-0.0136,0.4478],[0.3809,-0.0148,0.4468]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.3251,-0.0336,0.4493]],[[0.3251,-0.0336,0.4493],[0.3453,-0.0359,0.448]],[[0.3453,-0.0359,0.448],[0.3618,-0.0373,0.4459]]]],"fingertips":[[0.3418,0.0498,0.3887],[0.387,0.0316,0.4457],[0.3915,0.0087,0.4465],[0.3809,-0.0148,0.4468],[0.3618,-0.0373,0.4459]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2783,0.0588,0.4375]],[[0.2783,0.0588,0.4375],[0.3065,0.0559,0.4156]],[[0.3065,0.0559,0.4156],[0.3258,0.0521,0.4005]],[[0.3258,0.0521,0.4005],[0.3412,0.0502,0.3885]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3448,0.0285,0.4491]],[[0.3448,0.0285,0.4491],[0.3693,0.031,0.4478]],[[0.3693,0.031,0.4478],[0.3872,0.0322,0.4447]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.3451,0.0085,0.4485]],[[0.3451,0.0085,0.4485],[0.3736,0.0081,0.4471]],[[0.3736,0.0081,0.4471],[0.3914,0.0084,0.4453]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3384,-0.0126,0.4483]],[[0.3384,-0.0126,0.4483],[0.3639,-0.0134,0.4477]],[[0.3639,-0.0134,0.4477],[0.3812,-0.0143,0.4455]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3267,-0.0348,0.4487]],[[0.3267,-0.0348,0.4487],[0.3445,-0.0351,0.4469]],[[0.3445,-0.0351,0.4469],[0.3608,-0.036,0.4457]]]],"fingertips":[[0.3412,0.0502,0.3885],[0.3872,0.0322,0.4447],[0.3914,0.0084,0.4453],[0.3812,-0.0143,0.4455],[0.3608,-0.036,0.4457]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.2776,0.0593,0.4381]],[[0.2776,0.0593,0.4381],[0.3062,0.0558,0.4156]],[[0.3062,0.0558,0.4156],[0.3244,0.0521,0.4005]],[[0.3244,0.0521,0.4005],[0.3406,0.05,0.3877]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3442,0.0294,0.4491]],[[0.3442,0.0294,0.4491],[0.3693,0.0307,0.4483]],[[0.3693,0.0307,0.4483],[0.3858,0.0321,0.446]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.3452,0.009,0.4477]],[[0.3452,0.009,0.4477],[0.3721,0.0086,0.4477]],[[0.3721,0.0086,0.4477],[0.3919,0.0083,0.4454]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3372,-0.0117,0.4478]],[[0.3372,-0.0117,0.4478],[0.3622,-0.0135,0.4486]],[[0.3622,-0.0135,0.4486],[0.3805,-0.0137,0.4459]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3243,-0.0328,0.4494]],[[0.3243,-0.0328,0.4494],[0.344,-0.035,0.4477]],[[0.344,-0.035,0.4477],[0.359,-0.0364,0.4462]]]],"fingertips":[[0.3406,0.05,0.3877],[0.3858,0.0321,0.446],[0.3919,0.0083,0.4454],[0.3805,-0.0137,0.4459],[0.359,-0.0364,0.4462]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.277,0.0588,0.4373]],[[0.277,0.0588,0.4373],[0.3054,0.0549,0.4157]],[[0.3054,0.0549,0.4157],[0.3241,0.0508,0.4015]],[[0.3241,0.0508,0.4015],[0.3403,0.0488,0.3888]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3444,0.0297,0.4491]],[[0.3444,0.0297,0.4491],[0.3685,0.0304,0.4476]],[[0.3685,0.0304,0.4476],[0.3862,0.0314,0.4468]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3458,0.0081,0.4493]],[[0.3458,0.0081,0.4493],[0.3714,0.0072,0.4472]],[[0.3714,0.0072,0.4472],[0.3906,0.0081,0.4461]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3373,-0.0127,0.4495]],[[0.3373,-0.0127,0.4495],[0.3614,-0.0142,0.4477]],[[0.3614,-0.0142,0.4477],[0.3793,-0.0149,0.4468]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.325,-0.0336,0.4488]],[[0.325,-0.0336,0.4488],[0.3434,-0.0359,0.4479]],[[0.3434,-0.0359,0.4479],[0.3598,-0.0373,0.4463]]]],"fingertips":[[0.3403,0.0488,0.3888],[0.3862,0.0314,0.4468],[0.3906,0.0081,0.4461],[0.3793,-0.0149,0.4468],[0.3598,-0.0373,0.4463]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.2785,0.061,0.4372]],[[0.2785,0.061,0.4372],[0.3072,0.056,0.4147]],[[0.3072,0.056,0.4147],[0.3252,0.0525,0.401]],[[0.3252,0.0525,0.401],[0.3404,0.0512,0.3887]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3452,0.03,0.4489]],[[0.3452,0.03,0.4489],[0.3681,0.0308,0.4476]],[[0.3681,0.0308,0.4476],[0.3881,0.0327,0.4464]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3463,0.0084,0.4494]],[[0.3463,0.0084,0.4494],[0.3741,0.0087,0.448]],[[0.3741,0.0087,0.448],[0.3921,0.0091,0.4464]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3373,-0.0108,0.4482]],[[0.3373,-0.0108,0.4482],[0.3631,-0.0129,0.4472]],[[0.3631,-0.0129,0.4472],[0.3803,-0.0123,0.4455]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.3261,-0.0324,0.4484]],[[0.3261,-0.0324,0.4484],[0.3449,-0.0346,0.4475]],[[0.3449,-0.0346,0.4475],[0.3605,-0.0361,0.4457]]]],"fingertips":[[0.3404,0.0512,0.3887],[0.3881,0.0327,0.4464],[0.3921,0.0091,0.4464],[0.3803,-0.0123,0.4455],[0.3605,-0.0361,0.4457]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2798,0.0597,0.4382]],[[0.2798,0.0597,0.4382],[0.3066,0.054,0.4144]],[[0.3066,0.054,0.4144],[0.326,0.0524,0.4002]],[[0.326,0.0524,0.4002],[0.3417,0.0491,0.3892]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.3446,0.0306,0.449]],[[0.3446,0.0306,0.449],[0.3689,0.031,0.4478]],[[0.3689,0.031,0.4478],[0.3861,0.0322,0.4461]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.3472,0.0084,0.4484]],[[0.3472,0.0084,0.4484],[0.3733,0.0081,0.4472]],[[0.3733,0.0081,0.4472],[0.393,0.0087,0.446]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3395,-0.0118,0.4489]],[[0.3395,-0.0118,0.4489],[0.3642,-0.013,0.4471]],[[0.3642,-0.013,0.4471],[0.3815,-0.0142,0.446]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3256,-0.0336,0.4499]],[[0.3256,-0.0336,0.4499],[0.3446,-0.0343,0.4482]],[[0.3446,-0.0343,0.4482],[0.3607,-0.0372,0.4462]]]],"fingertips":[[0.3417,0.0491,0.3892],[0.3861,0.0322,0.4461],[0.393,0.0087,0.446],[0.3815,-0.0142,0.446],[0.3607,-0.0372,0.4462]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2784,0.0589,0.4382]],[[0.2784,0.0589,0.4382],[0.3058,0.0537,0.4156]],[[0.3058,0.0537,0.4156],[0.3254,0.0505,0.4003]],[[0.3254,0.0505,0.4003],[0.3415,0.0479,0.3886]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.345,0.0292,0.4491]],[[0.345,0.0292,0.4491],[0.3692,0.0297,0.4476]],[[0.3692,0.0297,0.4476],[0.3872,0.0299,0.4472]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3455,0.007,0.4495]],[[0.3455,0.007,0.4495],[0.3728,0.0076,0.4469]],[[0.3728,0.0076,0.4469],[0.3919,0.0072,0.4461]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3375,-0.0134,0.4487]],[[0.3375,-0.0134,0.4487],[0.3622,-0.0133,0.4473]],[[0.3622,-0.0133,0.4473],[0.3805,-0.0147,0.4469]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.326,-0.0343,0.4483]],[[0.326,-0.0343,0.4483],[0.3447,-0.0373,0.4487]],[[0.3447,-0.0373,0.4487],[0.3616,-0.0375,0.446]]]],"fingertips":[[0.3415,0.0479,0.3886],[0.3872,0.0299,0.4472],[0.3919,0.0072,0.4461],[0.3805,-0.0147,0.4469],[0.3616,-0.0375,0.446]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2779,0.0585,0.4386]],[[0.2779,0.0585,0.4386],[0.3058,0.0553,0.4158]],[[0.3058,0.0553,0.4158],[0.3233,0.0515,0.4026]],[[0.3233,0.0515,0.4026],[0.3405,0.0493,0.3898]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.3438,0.0298,0.4501]],[[0.3438,0.0298,0.4501],[0.3687,0.0312,0.4486]],[[0.3687,0.0312,0.4486],[0.3875,0.0319,0.4475]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3457,0.008,0.4489]],[[0.3457,0.008,0.4489],[0.373,0.0078,0.4472]],[[0.373,0.0078,0.4472],[0.3913,0.0071,0.4461]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.3382,-0.0121,0.4497]],[[0.3382,-0.0121,0.4497],[0.3624,-0.0136,0.4488]],[[0.3624,-0.0136,0.4488],[0.38,-0.014,0.4469]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3255,-0.0336,0.4498]],[[0.3255,-0.0336,0.4498],[0.3446,-0.0363,0.4482]],[[0.3446,-0.0363,0.4482],[0.3593,-0.0368,0.446]]]],"fingertips":[[0.3405,0.0493,0.3898],[0.3875,0.0319,0.4475],[0.3913,0.0071,0.4461],[0.38,-0.014,0.4469],[0.3593,-0.0368,0.446]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2776,0.0592,0.4377]],[[0.2776,0.0592,0.4377],[0.3052,0.0555,0.4154]],[[0.3052,0.0555,0.4154],[0.3251,0.0515,0.4011]],[[0.3251,0.0515,0.4011],[0.3403,0.0487,0.3877]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3451,0.0288,0.4484]],[[0.3451,0.0288,0.4484],[0.3675,0.0307,0.4463]],[[0.3675,0.0307,0.4463],[0.3863,0.031,0.4442]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3454,0.0072,0.4475]],[[0.3454,0.0072,0.4475],[0.3729,0.008,0.4468]],[[0.3729,0.008,0.4468],[0.391,0.0076,0.4449]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.3379,-0.0124,0.4483]],[[0.3379,-0.0124,0.4483],[0.3618,-0.0142,0.4471]],[[0.3618,-0.0142,0.4471],[0.3799,-0.0147,0.4455]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.3251,-0.0336,0.4482]],[[0.3251,-0.0336,0.4482],[0.3437,-0.0354,0.4464]],[[0.3437,-0.0354,0.4464],[0.3602,-0.0382,0.445]]]],"fingertips":[[0.3403,0.0487,0.3877],[0.3863,0.031,0.4442],[0.391,0.0076,0.4449],[0.3799,-0.0147,0.4455],[0.3602,-0.0382,0.445]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2776,0.0592,0.437]],[[0.2776,0.0592,0.437],[0.3067,0.0549,0.4145]],[[0.3067,0.0549,0.4145],[0.3243,0.0514,0.4009]],[[0.3243,0.0514,0.4009],[0.341,0.0497,0.3873]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3443,0.0294,0.4486]],[[0.3443,0.0294,0.4486],[0.3689,0.031,0.4484]],[[0.3689,0.031,0.4484],[0.3867,0.032,0.4454]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.3451,0.0065,0.4496]],[[0.3451,0.0065,0.4496],[0.3734,0.0081,0.4461]],[[0.3734,0.0081,0.4461],[0.3913,0.0088,0.4442]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3375,-0.0131,0.4487]],[[0.3375,-0.0131,0.4487],[0.3636,-0.0134,0.4477]],[[0.3636,-0.0134,0.4477],[0.3806,-0.0147,0.4466]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.326,-0.0334,0.4478]],[[0.326,-0.0334,0.4478],[0.3447,-0.0354,0.4472]],[[0.3447,-0.0354,0.4472],[0.3605,-0.0369,0.4459]]]],"fingertips":[[0.341,0.0497,0.3873],[0.3867,0.032,0.4454],[0.3913,0.0088,0.4442],[0.3806,-0.0147,0.4466],[0.3605,-0.0369,0.4459]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.2766,0.0589,0.4378]],[[0.2766,0.0589,0.4378],[0.3048,0.0544,0.4148]],[[0.3048,0.0544,0.4148],[0.3245,0.0509,0.4009]],[[0.3245,0.0509,0.4009],[0.3395,0.0495,0.3891]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3431,0.0294,0.4492]],[[0.3431,0.0294,0.4492],[0.368,0.0305,0.4474]],[[0.368,0.0305,0.4474],[0.3855,0.032,0.4474]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3444,0.0078,0.4489]],[[0.3444,0.0078,0.4489],[0.3712,0.0087,0.4479]],[[0.3712,0.0087,0.4479],[0.3908,0.0076,0.4456]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.3359,-0.0129,0.4488]],[[0.3359,-0.0129,0.4488],[0.3614,-0.0142,0.4477]],[[0.3614,-0.0142,0.4477],[0.3796,-0.0143,0.4459]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3248,-0.0338,0.4493]],[[0.3248,-0.0338,0.4493],[0.3431,-0.0361,0.4475]],[[0.3431,-0.0361,0.4475],[0.359,-0.0365,0.4461]]]],"fingertips":[[0.3395,0.0495,0.3891],[0.3855,0.032,0.4474],[0.3908,0.0076,0.4456],[0.3796,-0.0143,0.4459],[0.359,-0.0365,0.4461]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.2763,0.0593,0.438]],[[0.2763,0.0593,0.438],[0.3049,0.0549,0.4159]],[[0.3049,0.0549,0.4159],[0.3237,0.0516,0.4009]],[[0.3237,0.0516,0.4009],[0.3396,0.0491,0.389]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3436,0.0296,0.4499]],[[0.3436,0.0296,0.4499],[0.367,0.0313,0.447]],[[0.367,0.0313,0.447],[0.3853,0.0318,0.446]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3447,0.0075,0.4496]],[[0.3447,0.0075,0.4496],[0.3713,0.0087,0.4472]],[[0.3713,0.0087,0.4472],[0.3916,0.0081,0.4463]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3353,-0.0128,0.4495]],[[0.3353,-0.0128,0.4495],[0.3618,-0.0136,0.4475]],[[0.3618,-0.0136,0.4475],[0.3792,-0.0145,0.4466]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3239,-0.0345,0.4489]],[[0.3239,-0.0345,0.4489],[0.3428,-0.0344,0.4475]],[[0.3428,-0.0344,0.4475],[0.3588,-0.0373,0.4455]]]],"fingertips":[[0.3396,0.0491,0.389],[0.3853,0.0318,0.446],[0.3916,0.0081,0.4463],[0.3792,-0.0145,0.4466],[0.3588,-0.0373,0.4455]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.278,0.0586,0.438]],[[0.278,0.0586,0.438],[0.3057,0.0548,0.4158]],[[0.3057,0.0548,0.4158],[0.3246,0.0511,0.4011]],[[0.3246,0.0511,0.4011],[0.3398,0.0489,0.388]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3442,0.0297,0.4491]],[[0.3442,0.0297,0.4491],[0.3689,0.0309,0.447]],[[0.3689,0.0309,0.447],[0.3867,0.0321,0.4456]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3455,0.0072,0.4491]],[[0.3455,0.0072,0.4491],[0.3732,0.0089,0.4473]],[[0.3732,0.0089,0.4473],[0.3915,0.0086,0.4466]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3375,-0.0128,0.4478]],[[0.3375,-0.0128,0.4478],[0.362,-0.0134,0.4475]],[[0.362,-0.0134,0.4475],[0.3802,-0.0141,0.4465]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3252,-0.0343,0.4499]],[[0.3252,-0.0343,0.4499],[0.3441,-0.0357,0.4473]],[[0.3441,-0.0357,0.4473],[0.3609,-0.0375,0.4458]]]],"fingertips":[[0.3398,0.0489,0.388],[0.3867,0.0321,0.4456],[0.3915,0.0086,0.4466],[0.3802,-0.0141,0.4465],[0.3609,-0.0375,0.4458]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.2772,0.0575,0.438]],[[0.2772,0.0575,0.438],[0.3064,0.0543,0.4151]],[[0.3064,0.0543,0.4151],[0.3247,0.0516,0.4018]],[[0.3247,0.0516,0.4018],[0.3407,0.0491,0.3893]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3442,0.0291,0.4484]],[[0.3442,0.0291,0.4484],[0.3682,0.0308,0.4476]],[[0.3682,0.0308,0.4476],[0.3865,0.0317,0.447]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3453,0.0077,0.449]],[[0.3453,0.0077,0.449],[0.3714,0.0082,0.4471]],[[0.3714,0.0082,0.4471],[0.3912,0.0076,0.4465]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3358,-0.0126,0.4501]],[[0.3358,-0.0126,0.4501],[0.3629,-0.014,0.448]],[[0.3629,-0.014,0.448],[0.3804,-0.0153,0.4464]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3262,-0.0345,0.4497]],[[0.3262,-0.0345,0.4497],[0.3449,-0.036,0.4474]],[[0.3449,-0.036,0.4474],[0.3604,-0.0371,0.4458]]]],"fingertips":[[0.3407,0.0491,0.3893],[0.3865,0.0317,0.447],[0.3912,0.0076,0.4465],[0.3804,-0.0153,0.4464],[0.3604,-0.0371,0.4458]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2784,0.0598,0.4379]],[[0.2784,0.0598,0.4379],[0.3072,0.0543,0.4149]],[[0.3072,0.0543,0.4149],[0.3255,0.0519,0.4005]],[[0.3255,0.0519,0.4005],[0.3413,0.0492,0.3891]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.346,0.0299,0.4492]],[[0.346,0.0299,0.4492],[0.3695,0.0305,0.4477]],[[0.3695,0.0305,0.4477],[0.3874,0.0325,0.4469]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3474,0.0083,0.4484]],[[0.3474,0.0083,0.4484],[0.3729,0.0079,0.447]],[[0.3729,0.0079,0.447],[0.3927,0.0084,0.4469]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.3392,-0.0112,0.4498]],[[0.3392,-0.0112,0.4498],[0.3642,-0.0125,0.4472]],[[0.3642,-0.0125,0.4472],[0.3818,-0.0142,0.4473]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3268,-0.0334,0.4492]],[[0.3268,-0.0334,0.4492],[0.345,-0.0347,0.4479]],[[0.345,-0.0347,0.4479],[0.3614,-0.0365,0.4459]]]],"fingertips":[[0.3413,0.0492,0.3891],[0.3874,0.0325,0.4469],[0.3927,0.0084,0.4469],[0.3818,-0.0142,0.4473],[0.3614,-0.0365,0.4459]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2783,0.0583,0.4377]],[[0.2783,0.0583,0.4377],[0.3067,0.055,0.4156]],[[0.3067,0.055,0.4156],[0.3244,0.0522,0.4004]],[[0.3244,0.0522,0.4004],[0.341,0.0484,0.3889]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3443,0.0299,0.449]],[[0.3443,0.0299,0.449],[0.3688,0.0309,0.4478]],[[0.3688,0.0309,0.4478],[0.387,0.0325,0.4462]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3464,0.0076,0.4485]],[[0.3464,0.0076,0.4485],[0.3726,0.0079,0.447]],[[0.3726,0.0079,0.447],[0.392,0.008,0.446]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.3378,-0.0129,0.4486]],[[0.3378,-0.0129,0.4486],[0.3624,-0.0137,0.4472]],[[0.3624,-0.0137,0.4472],[0.3805,-0.0138,0.4461]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.326,-0.0335,0.4489]],[[0.326,-0.0335,0.4489],[0.3449,-0.0363,0.447]],[[0.3449,-0.0363,0.447],[0.3605,-0.0367,0.4456]]]],"fingertips":[[0.341,0.0484,0.3889],[0.387,0.0325,0.4462],[0.392,0.008,0.446],[0.3805,-0.0138,0.4461],[0.3605,-0.0367,0.4456]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.278,0.0597,0.4378]],[[0.278,0.0597,0.4378],[0.3066,0.0547,0.4156]],[[0.3066,0.0547,0.4156],[0.3256,0.0525,0.4011]],[[0.3256,0.0525,0.4011],[0.3412,0.05,0.3892]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3455,0.0304,0.4494]],[[0.3455,0.0304,0.4494],[0.3691,0.0315,0.4476]],[[0.3691,0.0315,0.4476],[0.3871,0.0314,0.4467]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.3461,0.0083,0.4491]],[[0.3461,0.0083,0.4491],[0.374,0.0088,0.4481]],[[0.374,0.0088,0.4481],[0.3915,0.0088,0.4457]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3373,-0.0121,0.4501]],[[0.3373,-0.0121,0.4501],[0.3637,-0.0138,0.4478]],[[0.3637,-0.0138,0.4478],[0.3805,-0.0142,0.4464]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3255,-0.0326,0.4488]],[[0.3255,-0.0326,0.4488],[0.3447,-0.0348,0.4488]],[[0.3447,-0.0348,0.4488],[0.3605,-0.0363,0.447]]]],"fingertips":[[0.3412,0.05,0.3892],[0.3871,0.0314,0.4467],[0.3915,0.0088,0.4457],[0.3805,-0.0142,0.4464],[0.3605,-0.0363,0.447]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2777,0.0589,0.4376]],[[0.2777,0.0589,0.4376],[0.306,0.0541,0.4159]],[[0.306,0.0541,0.4159],[0.3248,0.0514,0.4006]],[[0.3248,0.0514,0.4006],[0.3406,0.0485,0.389]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3448,0.0288,0.4488]],[[0.3448,0.0288,0.4488],[0.3682,0.0316,0.447]],[[0.3682,0.0316,0.447],[0.3864,0.0303,0.4459]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3453,0.0076,0.4484]],[[0.3453,0.0076,0.4484],[0.3732,0.0072,0.4473]],[[0.3732,0.0072,0.4473],[0.3919,0.0067,0.445]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3385,-0.0137,0.4485]],[[0.3385,-0.0137,0.4485],[0.362,-0.0146,0.4472]],[[0.362,-0.0146,0.4472],[0.3806,-0.0151,0.4457]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3257,-0.035,0.4492]],[[0.3257,-0.035,0.4492],[0.344,-0.0371,0.4468]],[[0.344,-0.0371,0.4468],[0.3606,-0.0383,0.4464]]]],"fingertips":[[0.3406,0.0485,0.389],[0.3864,0.0303,0.4459],[0.3919,0.0067,0.445],[0.3806,-0.0151,0.4457],[0.3606,-0.0383,0.4464]]}],"five":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2728,0.0657,0.4456]],[[0.2728,0.0657,0.4456],[0.295,0.0944,0.4443]],[[0.295,0.0944,0.4443],[0.3091,0.1137,0.4417]],[[0.3091,0.1137,0.4417],[0.3235,0.1277,0.4392]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.345,0.0292,0.449]],[[0.345,0.0292,0.449],[0.3687,0.0297,0.4478]],[[0.3687,0.0297,0.4478],[0.387,0.0303,0.4467]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.3472,0.0077,0.4492]],[[0.3472,0.0077,0.4492],[0.3734,0.0074,0.4479]],[[0.3734,0.0074,0.4479],[0.3933,0.0066,0.446]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3392,-0.013,0.4496]],[[0.3392,-0.013,0.4496],[0.3642,-0.015,0.4483]],[[0.3642,-0.015,0.4483],[0.382,-0.0159,0.4468]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3269,-0.0346,0.4496]],[[0.3269,-0.0346,0.4496],[0.3452,-0.0358,0.4483]],[[0.3452,-0.0358,0.4483],[0.3612,-0.0374,0.447]]]],"fingertips":[[0.3235,0.1277,0.4392],[0.387,0.0303,0.4467],[0.3933,0.0066,0.446],[0.382,-0.0159,0.4468],[0.3612,-0.0374,0.447]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.2732,0.0667,0.4463]],[[0.2732,0.0667,0.4463],[0.2936,0.0963,0.4453]],[[0.2936,0.0963,0.4453],[0.3105,0.1137,0.4421]],[[0.3105,0.1137,0.4421],[0.323,0.1303,0.4403]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3454,0.0306,0.4499]],[[0.3454,0.0306,0.4499],[0.3685,0.0316,0.4493]],[[0.3685,0.0316,0.4493],[0.387,0.032,0.448]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3476,0.0085,0.4496]],[[0.3476,0.0085,0.4496],[0.3736,0.0085,0.4483]],[[0.3736,0.0085,0.4483],[0.3921,0.009,0.4475]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3387,-0.0119,0.4503]],[[0.3387,-0.0119,0.4503],[0.3635,-0.0119,0.449]],[[0.3635,-0.0119,0.449],[0.3817,-0.0134,0.4469]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3259,-0.0339,0.4499]],[[0.3259,-0.0339,0.4499],[0.345,-0.0341,0.4489]],[[0.345,-0.0341,0.4489],[0.3605,-0.0364,0.448]]]],"fingertips":[[0.323,0.1303,0.4403],[0.387,0.032,0.448],[0.3921,0.009,0.4475],[0.3817,-0.0134,0.4469],[0.3605,-0.0364,0.448]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.2724,0.0657,0.4455]],[[0.2724,0.0657,0.4455],[0.2937,0.0951,0.4434]],[[0.2937,0.0951,0.4434],[0.3096,0.1139,0.4416]],[[0.3096,0.1139,0.4416],[0.3226,0.1284,0.4389]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3455,0.0291,0.4487]],[[0.3455,0.0291,0.4487],[0.3689,0.0304,0.4479]],[[0.3689,0.0304,0.4479],[0.3867,0.0311,0.446]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3454,0.008,0.4492]],[[0.3454,0.008,0.4492],[0.3724,0.0079,0.448]],[[0.3724,0.0079,0.448],[0.3923,0.0079,0.4466]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.3379,-0.0133,0.4493]],[[0.3379,-0.0133,0.4493],[0.3639,-0.0132,0.4475]],[[0.3639,-0.0132,0.4475],[0.3814,-0.0147,0.4463]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.3251,-0.0345,0.4494]],[[0.3251,-0.0345,0.4494],[0.3456,-0.0357,0.4482]],[[0.3456,-0.0357,0.4482],[0.3605,-0.0381,0.4461]]]],"fingertips":[[0.3226,0.1284,0.4389],[0.3867,0.0311,0.446],[0.3923,0.0079,0.4466],[0.3814,-0.0147,0.4463],[0.3605,-0.0381,0.4461]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2726,0.0675,0.4456]],[[0.2726,0.0675,0.4456],[0.2942,0.0957,0.4442]],[[0.2942,0.0957,0.4442],[0.3096,0.1135,0.4421]],[[0.3096,0.1135,0.4421],[0.3232,0.129,0.4391]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3451,0.0297,0.4487]],[[0.3451,0.0297,0.4487],[0.3694,0.0311,0.4475]],[[0.3694,0.0311,0.4475],[0.387,0.0316,0.4457]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3459,0.0086,0.4493]],[[0.3459,0.0086,0.4493],[0.3731,0.0082,0.4472]],[[0.3731,0.0082,0.4472],[0.3915,0.0087,0.4465]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.3371,-0.0119,0.4491]],[[0.3371,-0.0119,0.4491],[0.3621,-0.0136,0.4478]],[[0.3621,-0.0136,0.4478],[0.3809,-0.0148,0.4468]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.3251,-0.0336,0.4493]],[[0.3251,-0.0336,0.4493],[0.3453,-0.0359,0.448]],[[0.3453,-0.0359,0.448],[0.3618,-0.0373,0.4459]]]],"fingertips":[[0.3232,0.129,0.4391],[0.387,0.0316,0.4457],[0.3915,0.0087,0.4465],[0.3809,-0.0148,0.4468],[0.3618,-0.0373,0.4459]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2723,0.0664,0.4454]],[[0.2723,0.0664,0.4454],[0.294,0.0964,0.4435]],[[0.294,0.0964,0.4435],[0.3098,0.114,0.4409]],[[0.3098,0.114,0.4409],[0.3226,0.1294,0.4389]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3448,0.0285,0.4491]],[[0.3448,0.0285,0.4491],[0.3693,0.031,0.4478]],[[0.3693,0.031,0.4478],[0.3872,0.0322,0.4447]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.3451,0.0085,0.4485]],[[0.3451,0.0085,0.4485],[0.3736,0.0081,0.4471]],[[0.3736,0.0081,0.4471],[0.3914,0.0084,0.4453]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3384,-0.0126,0.4483]],[[0.3384,-0.0126,0.4483],[0.3639,-0.0134,0.4477]],[[0.3639,-0.0134,0.4477],[0.3812,-0.0143,0.4455]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3267,-0.0348,0.4487]],[[0.3267,-0.0348,0.4487],[0.3445,-0.0351,0.4469]],[[0.3445,-0.0351,0.4469],[0.3608,-0.036,0.4457]]]],"fingertips":[[0.3226,0.1294,0.4389],[0.3872,0.0322,0.4447],[0.3914,0.0084,0.4453],[0.3812,-0.0143,0.4455],[0.3608,-0.036,0.4457]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.2715,0.0668,0.4459]],[[0.2715,0.0668,0.4459],[0.2937,0.0964,0.4436]],[[0.2937,0.0964,0.4436],[0.3084,0.114,0.441]],[[0.3084,0.114,0.441],[0.3221,0.1291,0.438]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3442,0.0294,0.4491]],[[0.3442,0.0294,0.4491],[0.3693,0.0307,0.4483]],[[0.3693,0.0307,0.4483],[0.3858,0.0321,0.446]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.3452,0.009,0.4477]],[[0.3452,0.009,0.4477],[0.3721,0.0086,0.4477]],[[0.3721,0.0086,0.4477],[0.3919,0.0083,0.4454]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3372,-0.0117,0.4478]],[[0.3372,-0.0117,0.4478],[0.3622,-0.0135,0.4486]],[[0.3622,-0.0135,0.4486],[0.3805,-0.0137,0.4459]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3243,-0.0328,0.4494]],[[0.3243,-0.0328,0.4494],[0.344,-0.035,0.4477]],[[0.344,-0.035,0.4477],[0.359,-0.0364,0.4462]]]],"fingertips":[[0.3221,0.1291,0.438],[0.3858,0.0321,0.446],[0.3919,0.0083,0.4454],[0.3805,-0.0137,0.4459],[0.359,-0.0364,0.4462]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.271,0.0664,0.4452]],[[0.271,0.0664,0.4452],[0.2929,0.0954,0.4436]],[[0.2929,0.0954,0.4436],[0.3081,0.1126,0.442]],[[0.3081,0.1126,0.442],[0.3218,0.128,0.4392]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3444,0.0297,0.4491]],[[0.3444,0.0297,0.4491],[0.3685,0.0304,0.4476]],[[0.3685,0.0304,0.4476],[0.3862,0.0314,0.4468]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3458,0.0081,0.4493]],[[0.3458,0.0081,0.4493],[0.3714,0.0072,0.4472]],[[0.3714,0.0072,0.4472],[0.3906,0.0081,0.4461]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3373,-0.0127,0.4495]],[[0.3373,-0.0127,0.4495],[0.3614,-0.0142,0.4477]],[[0.3614,-0.0142,0.4477],[0.3793,-0.0149,0.4468]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.325,-0.0336,0.4488]],[[0.325,-0.0336,0.4488],[0.3434,-0.0359,0.4479]],[[0.3434,-0.0359,0.4479],[0.3598,-0.0373,0.4463]]]],"fingertips":[[0.3218,0.128,0.4392],[0.3862,0.0314,0.4468],[0.3906,0.0081,0.4461],[0.3793,-0.0149,0.4468],[0.3598,-0.0373,0.4463]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.2724,0.0686,0.4451]],[[0.2724,0.0686,0.4451],[0.2947,0.0965,0.4427]],[[0.2947,0.0965,0.4427],[0.3091,0.1143,0.4415]],[[0.3091,0.1143,0.4415],[0.3218,0.1304,0.439]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3452,0.03,0.4489]],[[0.3452,0.03,0.4489],[0.3681,0.0308,0.4476]],[[0.3681,0.0308,0.4476],[0.3881,0.0327,0.4464]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3463,0.0084,0.4494]],[[0.3463,0.0084,0.4494],[0.3741,0.0087,0.448]],[[0.3741,0.0087,0.448],[0.3921,0.0091,0.4464]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3373,-0.0108,0.4482]],[[0.3373,-0.0108,0.4482],[0.3631,-0.0129,0.4472]],[[0.3631,-0.0129,0.4472],[0.3803,-0.0123,0.4455]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.3261,-0.0324,0.4484]],[[0.3261,-0.0324,0.4484],[0.3449,-0.0346,0.4475]],[[0.3449,-0.0346,0.4475],[0.3605,-0.0361,0.4457]]]],"fingertips":[[0.3218,0.1304,0.439],[0.3881,0.0327,0.4464],[0.3921,0.0091,0.4464],[0.3803,-0.0123,0.4455],[0.3605,-0.0361,0.4457]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2737,0.0673,0.4461]],[[0.2737,0.0673,0.4461],[0.2941,0.0945,0.4423]],[[0.2941,0.0945,0.4423],[0.3099,0.1143,0.4407]],[[0.3099,0.1143,0.4407],[0.3231,0.1283,0.4396]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.3446,0.0306,0.449]],[[0.3446,0.0306,0.449],[0.3689,0.031,0.4478]],[[0.3689,0.031,0.4478],[0.3861,0.0322,0.4461]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.3472,0.0084,0.4484]],[[0.3472,0.0084,0.4484],[0.3733,0.0081,0.4472]],[[0.3733,0.0081,0.4472],[0.393,0.0087,0.446]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3395,-0.0118,0.4489]],[[0.3395,-0.0118,0.4489],[0.3642,-0.013,0.4471]],[[0.3642,-0.013,0.4471],[0.3815,-0.0142,0.446]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3256,-0.0336,0.4499]],[[0.3256,-0.0336,0.4499],[0.3446,-0.0343,0.4482]],[[0.3446,-0.0343,0.4482],[0.3607,-0.0372,0.4462]]]],"fingertips":[[0.3231,0.1283,0.4396],[0.3861,0.0322,0.4461],[0.393,0.0087,0.446],[0.3815,-0.0142,0.446],[0.3607,-0.0372,0.4462]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2723,0.0665,0.446]],[[0.2723,0.0665,0.446],[0.2933,0.0942,0.4435]],[[0.2933,0.0942,0.4435],[0.3093,0.1124,0.4407]],[[0.3093,0.1124,0.4407],[0.323,0.1271,0.439]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.345,0.0292,0.4491]],[[0.345,0.0292,0.4491],[0.3692,0.0297,0.4476]],[[0.3692,0.0297,0.4476],[0.3872,0.0299,0.4472]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3455,0.007,0.4495]],[[0.3455,0.007,0.4495],[0.3728,0.0076,0.4469]],[[0.3728,0.0076,0.4469],[0.3919,0.0072,0.4461]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3375,-0.0134,0.4487]],[[0.3375,-0.0134,0.4487],[0.3622,-0.0133,0.4473]],[[0.3622,-0.0133,0.4473],[0.3805,-0.0147,0.4469]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.326,-0.0343,0.4483]],[[0.326,-0.0343,0.4483],[0.3447,-0.0373,0.4487]],[[0.3447,-0.0373,0.4487],[0.3616,-0.0375,0.446]]]],"fingertips":[[0.323,0.1271,0.439],[0.3872,0.0299,0.4472],[0.3919,0.0072,0.4461],[0.3805,-0.0147,0.4469],[0.3616,-0.0375,0.446]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2718,0.0661,0.4465]],[[0.2718,0.0661,0.4465],[0.2933,0.0958,0.4437]],[[0.2933,0.0958,0.4437],[0.3072,0.1134,0.4431]],[[0.3072,0.1134,0.4431],[0.322,0.1285,0.4401]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.3438,0.0298,0.4501]],[[0.3438,0.0298,0.4501],[0.3687,0.0312,0.4486]],[[0.3687,0.0312,0.4486],[0.3875,0.0319,0.4475]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3457,0.008,0.4489]],[[0.3457,0.008,0.4489],[0.373,0.0078,0.4472]],[[0.373,0.0078,0.4472],[0.3913,0.0071,0.4461]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.3382,-0.0121,0.4497]],[[0.3382,-0.0121,0.4497],[0.3624,-0.0136,0.4488]],[[0.3624,-0.0136,0.4488],[0.38,-0.014,0.4469]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3255,-0.0336,0.4498]],[[0.3255,-0.0336,0.4498],[0.3446,-0.0363,0.4482]],[[0.3446,-0.0363,0.4482],[0.3593,-0.0368,0.446]]]],"fingertips":[[0.322,0.1285,0.4401],[0.3875,0.0319,0.4475],[0.3913,0.0071,0.4461],[0.38,-0.014,0.4469],[0.3593,-0.0368,0.446]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2715,0.0668,0.4455]],[[0.2715,0.0668,0.4455],[0.2927,0.096,0.4433]],[[0.2927,0.096,0.4433],[0.3091,0.1134,0.4416]],[[0.3091,0.1134,0.4416],[0.3218,0.1279,0.4381]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3451,0.0288,0.4484]],[[0.3451,0.0288,0.4484],[0.3675,0.0307,0.4463]],[[0.3675,0.0307,0.4463],[0.3863,0.031,0.4442]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3454,0.0072,0.4475]],[[0.3454,0.0072,0.4475],[0.3729,0.008,0.4468]],[[0.3729,0.008,0.4468],[0.391,0.0076,0.4449]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.3379,-0.0124,0.4483]],[[0.3379,-0.0124,0.4483],[0.3618,-0.0142,0.4471]],[[0.3618,-0.0142,0.4471],[0.3799,-0.0147,0.4455]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.3251,-0.0336,0.4482]],[[0.3251,-0.0336,0.4482],[0.3437,-0.0354,0.4464]],[[0.3437,-0.0354,0.4464],[0.3602,-0.0382,0.445]]]],"fingertips":[[0.3218,0.1279,0.4381],[0.3863,0.031,0.4442],[0.391,0.0076,0.4449],[0.3799,-0.0147,0.4455],[0.3602,-0.0382,0.445]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2715,0.0668,0.4449]],[[0.2715,0.0668,0.4449],[0.2942,0.0955,0.4424]],[[0.2942,0.0955,0.4424],[0.3082,0.1133,0.4413]],[[0.3082,0.1133,0.4413],[0.3225,0.1289,0.4376]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3443,0.0294,0.4486]],[[0.3443,0.0294,0.4486],[0.3689,0.031,0.4484]],[[0.3689,0.031,0.4484],[0.3867,0.032,0.4454]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.3451,0.0065,0.4496]],[[0.3451,0.0065,0.4496],[0.3734,0.0081,0.4461]],[[0.3734,0.0081,0.4461],[0.3913,0.0088,0.4442]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3375,-0.0131,0.4487]],[[0.3375,-0.0131,0.4487],[0.3636,-0.0134,0.4477]],[[0.3636,-0.0134,0.4477],[0.3806,-0.0147,0.4466]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.326,-0.0334,0.4478]],[[0.326,-0.0334,0.4478],[0.3447,-0.0354,0.4472]],[[0.3447,-0.0354,0.4472],[0.3605,-0.0369,0.4459]]]],"fingertips":[[0.3225,0.1289,0.4376],[0.3867,0.032,0.4454],[0.3913,0.0088,0.4442],[0.3806,-0.0147,0.4466],[0.3605,-0.0369,0.4459]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.2705,0.0664,0.4457]],[[0.2705,0.0664,0.4457],[0.2923,0.0949,0.4427]],[[0.2923,0.0949,0.4427],[0.3085,0.1128,0.4413]],[[0.3085,0.1128,0.4413],[0.321,0.1286,0.4395]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3431,0.0294,0.4492]],[[0.3431,0.0294,0.4492],[0.368,0.0305,0.4474]],[[0.368,0.0305,0.4474],[0.3855,0.032,0.4474]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3444,0.0078,0.4489]],[[0.3444,0.0078,0.4489],[0.3712,0.0087,0.4479]],[[0.3712,0.0087,0.4479],[0.3908,0.0076,0.4456]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.3359,-0.0129,0.4488]],[[0.3359,-0.0129,0.4488],[0.3614,-0.0142,0.4477]],[[0.3614,-0.0142,0.4477],[0.3796,-0.0143,0.4459]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3248,-0.0338,0.4493]],[[0.3248,-0.0338,0.4493],[0.3431,-0.0361,0.4475]],[[0.3431,-0.0361,0.4475],[0.359,-0.0365,0.4461]]]],"fingertips":[[0.321,0.1286,0.4395],[0.3855,0.032,0.4474],[0.3908,0.0076,0.4456],[0.3796,-0.0143,0.4459],[0.359,-0.0365,0.4461]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.2702,0.0669,0.4459]],[[0.2702,0.0669,0.4459],[0.2924,0.0954,0.4438]],[[0.2924,0.0954,0.4438],[0.3076,0.1135,0.4413]],[[0.3076,0.1135,0.4413],[0.3211,0.1282,0.4394]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3436,0.0296,0.4499]],[[0.3436,0.0296,0.4499],[0.367,0.0313,0.447]],[[0.367,0.0313,0.447],[0.3853,0.0318,0.446]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3447,0.0075,0.4496]],[[0.3447,0.0075,0.4496],[0.3713,0.0087,0.4472]],[[0.3713,0.0087,0.4472],[0.3916,0.0081,0.4463]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3353,-0.0128,0.4495]],[[0.3353,-0.0128,0.4495],[0.3618,-0.0136,0.4475]],[[0.3618,-0.0136,0.4475],[0.3792,-0.0145,0.4466]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3239,-0.0345,0.4489]],[[0.3239,-0.0345,0.4489],[0.3428,-0.0344,0.4475]],[[0.3428,-0.0344,0.4475],[0.3588,-0.0373,0.4455]]]],"fingertips":[[0.3211,0.1282,0.4394],[0.3853,0.0318,0.446],[0.3916,0.0081,0.4463],[0.3792,-0.0145,0.4466],[0.3588,-0.0373,0.4455]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.272,0.0662,0.4458]],[[0.272,0.0662,0.4458],[0.2932,0.0954,0.4438]],[[0.2932,0.0954,0.4438],[0.3085,0.113,0.4416]],[[0.3085,0.113,0.4416],[0.3213,0.1281,0.4384]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3442,0.0297,0.4491]],[[0.3442,0.0297,0.4491],[0.3689,0.0309,0.447]],[[0.3689,0.0309,0.447],[0.3867,0.0321,0.4456]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3455,0.0072,0.4491]],[[0.3455,0.0072,0.4491],[0.3732,0.0089,0.4473]],[[0.3732,0.0089,0.4473],[0.3915,0.0086,0.4466]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3375,-0.0128,0.4478]],[[0.3375,-0.0128,0.4478],[0.362,-0.0134,0.4475]],[[0.362,-0.0134,0.4475],[0.3802,-0.0141,0.4465]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3252,-0.0343,0.4499]],[[0.3252,-0.0343,0.4499],[0.3441,-0.0357,0.4473]],[[0.3441,-0.0357,0.4473],[0.3609,-0.0375,0.4458]]]],"fingertips":[[0.3213,0.1281,0.4384],[0.3867,0.0321,0.4456],[0.3915,0.0086,0.4466],[0.3802,-0.0141,0.4465],[0.3609,-0.0375,0.4458]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.2711,0.0651,0.4458]],[[0.2711,0.0651,0.4458],[0.2939,0.0948,0.443]],[[0.2939,0.0948,0.443],[0.3087,0.1135,0.4423]],[[0.3087,0.1135,0.4423],[0.3221,0.1282,0.4397]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3442,0.0291,0.4484]],[[0.3442,0.0291,0.4484],[0.3682,0.0308,0.4476]],[[0.3682,0.0308,0.4476],[0.3865,0.0317,0.447]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3453,0.0077,0.449]],[[0.3453,0.0077,0.449],[0.3714,0.0082,0.4471]],[[0.3714,0.0082,0.4471],[0.3912,0.0076,0.4465]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3358,-0.0126,0.4501]],[[0.3358,-0.0126,0.4501],[0.3629,-0.014,0.448]],[[0.3629,-0.014,0.448],[0.3804,-0.0153,0.4464]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3262,-0.0345,0.4497]],[[0.3262,-0.0345,0.4497],[0.3449,-0.036,0.4474]],[[0.3449,-0.036,0.4474],[0.3604,-0.0371,0.4458]]]],"fingertips":[[0.3221,0.1282,0.4397],[0.3865,0.0317,0.447],[0.3912,0.0076,0.4465],[0.3804,-0.0153,0.4464],[0.3604,-0.0371,0.4458]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2723,0.0674,0.4458]],[[0.2723,0.0674,0.4458],[0.2948,0.0948,0.4429]],[[0.2948,0.0948,0.4429],[0.3095,0.1138,0.4409]],[[0.3095,0.1138,0.4409],[0.3228,0.1284,0.4395]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.346,0.0299,0.4492]],[[0.346,0.0299,0.4492],[0.3695,0.0305,0.4477]],[[0.3695,0.0305,0.4477],[0.3874,0.0325,0.4469]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3474,0.0083,0.4484]],[[0.3474,0.0083,0.4484],[0.3729,0.0079,0.447]],[[0.3729,0.0079,0.447],[0.3927,0.0084,0.4469]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.3392,-0.0112,0.4498]],[[0.3392,-0.0112,0.4498],[0.3642,-0.0125,0.4472]],[[0.3642,-0.0125,0.4472],[0.3818,-0.0142,0.4473]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3268,-0.0334,0.4492]],[[0.3268,-0.0334,0.4492],[0.345,-0.0347,0.4479]],[[0.345,-0.0347,0.4479],[0.3614,-0.0365,0.4459]]]],"fingertips":[[0.3228,0.1284,0.4395],[0.3874,0.0325,0.4469],[0.3927,0.0084,0.4469],[0.3818,-0.0142,0.4473],[0.3614,-0.0365,0.4459]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2723,0.0659,0.4456]],[[0.2723,0.0659,0.4456],[0.2942,0.0956,0.4435]],[[0.2942,0.0956,0.4435],[0.3084,0.1141,0.4409]],[[0.3084,0.1141,0.4409],[0.3224,0.1276,0.4393]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3443,0.0299,0.449]],[[0.3443,0.0299,0.449],[0.3688,0.0309,0.4478]],[[0.3688,0.0309,0.4478],[0.387,0.0325,0.4462]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3464,0.0076,0.4485]],[[0.3464,0.0076,0.4485],[0.3726,0.0079,0.447]],[[0.3726,0.0079,0.447],[0.392,0.008,0.446]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.3378,-0.0129,0.4486]],[[0.3378,-0.0129,0.4486],[0.3624,-0.0137,0.4472]],[[0.3624,-0.0137,0.4472],[0.3805,-0.0138,0.4461]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.326,-0.0335,0.4489]],[[0.326,-0.0335,0.4489],[0.3449,-0.0363,0.447]],[[0.3449,-0.0363,0.447],[0.3605,-0.0367,0.4456]]]],"fingertips":[[0.3224,0.1276,0.4393],[0.387,0.0325,0.4462],[0.392,0.008,0.446],[0.3805,-0.0138,0.4461],[0.3605,-0.0367,0.4456]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.2719,0.0673,0.4457]],[[0.2719,0.0673,0.4457],[0.2941,0.0953,0.4436]],[[0.2941,0.0953,0.4436],[0.3096,0.1144,0.4416]],[[0.3096,0.1144,0.4416],[0.3227,0.1292,0.4396]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3455,0.0304,0.4494]],[[0.3455,0.0304,0.4494],[0.3691,0.0315,0.4476]],[[0.3691,0.0315,0.4476],[0.3871,0.0314,0.4467]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.3461,0.0083,0.4491]],[[0.3461,0.0083,0.4491],[0.374,0.0088,0.4481]],[[0.374,0.0088,0.4481],[0.3915,0.0088,0.4457]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3373,-0.0121,0.4501]],[[0.3373,-0.0121,0.4501],[0.3637,-0.0138,0.4478]],[[0.3637,-0.0138,0.4478],[0.3805,-0.0142,0.4464]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3255,-0.0326,0.4488]],[[0.3255,-0.0326,0.4488],[0.3447,-0.0348,0.4488]],[[0.3447,-0.0348,0.4488],[0.3605,-0.0363,0.447]]]],"fingertips":[[0.3227,0.1292,0.4396],[0.3871,0.0314,0.4467],[0.3915,0.0088,0.4457],[0.3805,-0.0142,0.4464],[0.3605,-0.0363,0.447]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2716,0.0665,0.4454]],[[0.2716,0.0665,0.4454],[0.2935,0.0946,0.4438]],[[0.2935,0.0946,0.4438],[0.3087,0.1132,0.4411]],[[0.3087,0.1132,0.4411],[0.3221,0.1277,0.4394]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3448,0.0288,0.4488]],[[0.3448,0.0288,0.4488],[0.3682,0.0316,0.447]],[[0.3682,0.0316,0.447],[0.3864,0.0303,0.4459]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3453,0.0076,0.4484]],[[0.3453,0.0076,0.4484],[0.3732,0.0072,0.4473]],[[0.3732,0.0072,0.4473],[0.3919,0.0067,0.445]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3385,-0.0137,0.4485]],[[0.3385,-0.0137,0.4485],[0.362,-0.0146,0.4472]],[[0.362,-0.0146,0.4472],[0.3806,-0.0151,0.4457]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3257,-0.035,0.4492]],[[0.3257,-0.035,0.4492],[0.344,-0.0371,0.4468]],[[0.344,-0.0371,0.4468],[0.3606,-0.0383,0.4464]]]],"fingertips":[[0.3221,0.1277,0.4394],[0.3864,0.0303,0.4459],[0.3919,0.0067,0.445],[0.3806,-0.0151,0.4457],[0.3606,-0.0383,0.4464]]}],"thumbsup":[{"t":0.0,"visible":true,"palm_position":[0.2509,-0.0008,0.4504],"palm_direction":[1.0,-0.005,0.0005],"palm_normal":[0.0005,0.0023,-1.0],"z_rotation":-0.005,"fingers":[[[[0.2559,0.0419,0.4471],[0.2726,0.0658,0.4458]],[[0.2726,0.0658,0.4458],[0.2943,0.0951,0.4451]],[[0.2943,0.0951,0.4451],[0.3077,0.1149,0.4433]],[[0.3077,0.1149,0.4433],[0.3214,0.1295,0.4416]]],[[[0.2511,0.0246,0.4503],[0.3058,0.0273,0.45]],[[0.3058,0.0273,0.45],[0.3331,0.0286,0.4216]],[[0.3331,0.0286,0.4216],[0.3326,0.0279,0.3977]],[[0.3326,0.0279,0.3977],[0.3224,0.0271,0.3834]]],[[[0.2513,0.0071,0.4501],[0.3031,0.0076,0.4503]],[[0.3031,0.0076,0.4503],[0.3341,0.0077,0.419]],[[0.3341,0.0077,0.419],[0.333,0.0074,0.3923]],[[0.333,0.0074,0.3923],[0.3228,0.0066,0.3764]]],[[[0.2505,-0.0107,0.4505],[0.2991,-0.0121,0.4511]],[[0.2991,-0.0121,0.4511],[0.3273,-0.0125,0.4222]],[[0.3273,-0.0125,0.4222],[0.3271,-0.0135,0.3973]],[[0.3271,-0.0135,0.3973],[0.3163,-0.0133,0.3826]]],[[[0.2508,-0.0274,0.4502],[0.2957,-0.0316,0.45]],[[0.2957,-0.0316,0.45],[0.3177,-0.0338,0.4286]],[[0.3177,-0.0338,0.4286],[0.3169,-0.0332,0.4097]],[[0.3169,-0.0332,0.4097],[0.3077,-0.0326,0.3971]]]],"fingertips":[[0.3214,0.1295,0.4416],[0.3224,0.0271,0.3834],[0.3228,0.0066,0.3764],[0.3163,-0.0133,0.3826],[0.3077,-0.0326,0.3971]]},{"t":0.0333,"visible":true,"palm_position":[0.2504,0.0009,0.4511],"palm_direction":[1.0,0.0023,-0.0019],"palm_normal":[-0.0019,-0.0041,-1.0],"z_rotation":0.0023,"fingers":[[[[0.256,0.0423,0.4473],[0.273,0.0669,0.4465]],[[0.273,0.0669,0.4465],[0.2928,0.0969,0.4461]],[[0.2928,0.0969,0.4461],[0.3091,0.1149,0.4437]],[[0.3091,0.1149,0.4437],[0.3209,0.1321,0.4426]]],[[[0.25,0.0261,0.4511],[0.3052,0.0283,0.4513]],[[0.3052,0.0283,0.4513],[0.3335,0.03,0.4225]],[[0.3335,0.03,0.4225],[0.3324,0.0298,0.3992]],[[0.3324,0.0298,0.3992],[0.3224,0.0288,0.3847]]],[[[0.2506,0.01,0.4511],[0.3021,0.0082,0.4517]],[[0.3021,0.0082,0.4517],[0.3346,0.0085,0.4194]],[[0.3346,0.0085,0.4194],[0.3332,0.0085,0.3926]],[[0.3332,0.0085,0.3926],[0.3216,0.009,0.3779]]],[[[0.2504,-0.0076,0.4509],[0.2985,-0.0111,0.4503]],[[0.2985,-0.0111,0.4503],[0.3268,-0.0114,0.4229]],[[0.3268,-0.0114,0.4229],[0.3264,-0.0105,0.398]],[[0.3264,-0.0105,0.398],[0.316,-0.0107,0.3827]]],[[[0.25,-0.0263,0.4505],[0.2949,-0.0302,0.4512]],[[0.2949,-0.0302,0.4512],[0.3167,-0.033,0.429]],[[0.3167,-0.033,0.429],[0.3167,-0.0315,0.4103]],[[0.3167,-0.0315,0.4103],[0.3069,-0.0316,0.3981]]]],"fingertips":[[0.3209,0.1321,0.4426],[0.3224,0.0288,0.3847],[0.3216,0.009,0.3779],[0.316,-0.0107,0.3827],[0.3069,-0.0316,0.3981]]},{"t":0.0667,"visible":true,"palm_position":[0.2502,-0.0002,0.4502],"palm_direction":[1.0,-0.0074,0.0043],"palm_normal":[0.0043,0.0028,-1.0],"z_rotation":-0.0074,"fingers":[[[[0.2555,0.0421,0.4463],[0.2723,0.0658,0.4457]],[[0.2723,0.0658,0.4457],[0.2929,0.0957,0.4442]],[[0.2929,0.0957,0.4442],[0.3082,0.1151,0.4432]],[[0.3082,0.1151,0.4432],[0.3206,0.1302,0.4413]]],[[[0.2501,0.0245,0.4503],[0.3052,0.0278,0.4495]],[[0.3052,0.0278,0.4495],[0.3337,0.0286,0.4213]],[[0.3337,0.0286,0.4213],[0.3328,0.0286,0.3978]],[[0.3328,0.0286,0.3978],[0.322,0.0279,0.3827]]],[[[0.2509,0.0078,0.4496],[0.3022,0.007,0.451]],[[0.3022,0.007,0.451],[0.3324,0.008,0.4191]],[[0.3324,0.008,0.4191],[0.332,0.0079,0.3923]],[[0.332,0.0079,0.3923],[0.3218,0.0079,0.3769]]],[[[0.2503,-0.009,0.4501],[0.2985,-0.0116,0.4505]],[[0.2985,-0.0116,0.4505],[0.326,-0.0128,0.4219]],[[0.326,-0.0128,0.4219],[0.3268,-0.0118,0.3964]],[[0.3268,-0.0118,0.3964],[0.3157,-0.012,0.3821]]],[[[0.2503,-0.0284,0.4502],[0.2945,-0.0316,0.4494]],[[0.2945,-0.0316,0.4494],[0.316,-0.0337,0.4285]],[[0.316,-0.0337,0.4285],[0.3173,-0.0332,0.4096]],[[0.3173,-0.0332,0.4096],[0.307,-0.0333,0.3962]]]],"fingertips":[[0.3206,0.1302,0.4413],[0.322,0.0279,0.3827],[0.3218,0.0079,0.3769],[0.3157,-0.012,0.3821],[0.307,-0.0333,0.3962]]},{"t":0.1,"visible":true,"palm_position":[0.25,-0.0,0.4504],"palm_direction":[1.0,0.0011,0.0038],"palm_normal":[0.0038,0.0006,-1.0],"z_rotation":0.0011,"fingers":[[[[0.2549,0.0419,0.4462],[0.2724,0.0676,0.4458]],[[0.2724,0.0676,0.4458],[0.2934,0.0963,0.4451]],[[0.2934,0.0963,0.4451],[0.3082,0.1146,0.4437]],[[0.3082,0.1146,0.4437],[0.3212,0.1308,0.4414]]],[[[0.2503,0.0256,0.4506],[0.3046,0.0285,0.4498]],[[0.3046,0.0285,0.4498],[0.3332,0.0291,0.4214]],[[0.3332,0.0291,0.4214],[0.3333,0.0293,0.3974]],[[0.3333,0.0293,0.3974],[0.3224,0.0284,0.3824]]],[[[0.2496,0.0081,0.4507],[0.3021,0.008,0.4507]],[[0.3021,0.008,0.4507],[0.3328,0.0086,0.4192]],[[0.3328,0.0086,0.4192],[0.3327,0.0082,0.3916]],[[0.3327,0.0082,0.3916],[0.321,0.0087,0.3769]]],[[[0.2498,-0.0089,0.4502],[0.2981,-0.0113,0.4506]],[[0.2981,-0.0113,0.4506],[0.3252,-0.0114,0.4217]],[[0.3252,-0.0114,0.4217],[0.3249,-0.0122,0.3968]],[[0.3249,-0.0122,0.3968],[0.3152,-0.0122,0.3826]]],[[[0.2518,-0.0277,0.4506],[0.2946,-0.031,0.4495]],[[0.2946,-0.031,0.4495],[0.3159,-0.0328,0.4283]],[[0.3159,-0.0328,0.4283],[0.3171,-0.0333,0.4094]],[[0.3171,-0.0333,0.4094],[0.3083,-0.0325,0.396]]]],"fingertips":[[0.3212,0.1308,0.4414],[0.3224,0.0284,0.3824],[0.321,0.0087,0.3769],[0.3152,-0.0122,0.3826],[0.3083,-0.0325,0.396]]},{"t":0.1333,"visible":true,"palm_position":[0.2502,0.0002,0.4496],"palm_direction":[1.0,-0.0041,0.001],"palm_normal":[0.001,0.0027,-1.0],"z_rotation":-0.0041,"fingers":[[[[0.2565,0.0428,0.4442],[0.2721,0.0665,0.4455]],[[0.2721,0.0665,0.4455],[0.2932,0.097,0.4444]],[[0.2932,0.097,0.4444],[0.3083,0.1151,0.4425]],[[0.3083,0.1151,0.4425],[0.3206,0.1312,0.4412]]],[[[0.25,0.0258,0.4497],[0.3051,0.0275,0.4493]],[[0.3051,0.0275,0.4493],[0.3329,0.0279,0.4217]],[[0.3329,0.0279,0.4217],[0.3332,0.0292,0.3977]],[[0.3332,0.0292,0.3977],[0.3225,0.029,0.3814]]],[[[0.2501,0.0085,0.4504],[0.3031,0.0089,0.449]],[[0.3031,0.0089,0.449],[0.332,0.0085,0.4183]],[[0.332,0.0085,0.4183],[0.3332,0.0081,0.3914]],[[0.3332,0.0081,0.3914],[0.3208,0.0084,0.3757]]],[[[0.2504,-0.0086,0.4496],[0.2983,-0.0107,0.45]],[[0.2983,-0.0107,0.45],[0.3265,-0.0121,0.4209]],[[0.3265,-0.0121,0.4209],[0.3268,-0.0119,0.3967]],[[0.3268,-0.0119,0.3967],[0.3155,-0.0117,0.3812]]],[[[0.2503,-0.0267,0.4499],[0.2944,-0.0311,0.4496]],[[0.2944,-0.0311,0.4496],[0.3175,-0.034,0.4278]],[[0.3175,-0.034,0.4278],[0.3162,-0.0326,0.4083]],[[0.3162,-0.0326,0.4083],[0.3073,-0.0312,0.3958]]]],"fingertips":[[0.3206,0.1312,0.4412],[0.3225,0.029,0.3814],[0.3208,0.0084,0.3757],[0.3155,-0.0117,0.3812],[0.3073,-0.0312,0.3958]]},{"t":0.1667,"visible":true,"palm_position":[0.2494,0.0005,0.4498],"palm_direction":[1.0,-0.0049,0.0006],"palm_normal":[0.0005,-0.0104,-0.9999],"z_rotation":-0.0049,"fingers":[[[[0.2544,0.0424,0.4462],[0.2713,0.067,0.4461]],[[0.2713,0.067,0.4461],[0.293,0.097,0.4444]],[[0.293,0.097,0.4444],[0.307,0.1151,0.4425]],[[0.307,0.1151,0.4425],[0.32,0.131,0.4404]]],[[[0.2494,0.0248,0.4499],[0.3037,0.0276,0.4499]],[[0.3037,0.0276,0.4499],[0.3323,0.0288,0.4217]],[[0.3323,0.0288,0.4217],[0.3331,0.0289,0.3982]],[[0.3331,0.0289,0.3982],[0.3211,0.0289,0.3827]]],[[[0.2487,0.0091,0.45],[0.301,0.0084,0.449]],[[0.301,0.0084,0.449],[0.3321,0.009,0.4176]],[[0.3321,0.009,0.4176],[0.3317,0.0086,0.392]],[[0.3317,0.0086,0.392],[0.3214,0.0083,0.3757]]],[[[0.2496,-0.0087,0.4496],[0.2979,-0.0096,0.4499]],[[0.2979,-0.0096,0.4499],[0.3253,-0.0113,0.4204]],[[0.3253,-0.0113,0.4204],[0.3251,-0.0121,0.3975]],[[0.3251,-0.0121,0.3975],[0.3149,-0.011,0.3817]]],[[[0.2481,-0.0261,0.4506],[0.2938,-0.0302,0.4502]],[[0.2938,-0.0302,0.4502],[0.3151,-0.032,0.4284]],[[0.3151,-0.032,0.4284],[0.3157,-0.0325,0.4091]],[[0.3157,-0.0325,0.4091],[0.3055,-0.0316,0.3963]]]],"fingertips":[[0.32,0.131,0.4404],[0.3211,0.0289,0.3827],[0.3214,0.0083,0.3757],[0.3149,-0.011,0.3817],[0.3055,-0.0316,0.3963]]},{"t":0.2,"visible":true,"palm_position":[0.2492,-0.0004,0.4501],"palm_direction":[1.0,-0.006,0.0067],"palm_normal":[0.0067,-0.0047,-1.0],"z_rotation":-0.006,"fingers":[[[[0.2544,0.041,0.4466],[0.2708,0.0665,0.4454]],[[0.2708,0.0665,0.4454],[0.2921,0.096,0.4445]],[[0.2921,0.096,0.4445],[0.3067,0.1138,0.4435]],[[0.3067,0.1138,0.4435],[0.3197,0.1298,0.4415]]],[[[0.2487,0.0241,0.4497],[0.3043,0.0275,0.4497]],[[0.3043,0.0275,0.4497],[0.3326,0.0291,0.4217]],[[0.3326,0.0291,0.4217],[0.3324,0.0286,0.3976]],[[0.3324,0.0286,0.3976],[0.3215,0.0282,0.3835]]],[[[0.2486,0.0083,0.4497],[0.3011,0.0069,0.4504]],[[0.3011,0.0069,0.4504],[0.3327,0.0081,0.4192]],[[0.3327,0.0081,0.4192],[0.331,0.0072,0.3915]],[[0.331,0.0072,0.3915],[0.3201,0.0081,0.3765]]],[[[0.2492,-0.0092,0.4496],[0.2967,-0.0118,0.4503]],[[0.2967,-0.0118,0.4503],[0.3254,-0.0122,0.4222]],[[0.3254,-0.0122,0.4222],[0.3242,-0.0127,0.3967]],[[0.3242,-0.0127,0.3967],[0.3136,-0.0123,0.3826]]],[[[0.2498,-0.0269,0.4501],[0.2939,-0.0309,0.4499]],[[0.2939,-0.0309,0.4499],[0.3159,-0.0328,0.4278]],[[0.3159,-0.0328,0.4278],[0.3152,-0.0334,0.4093]],[[0.3152,-0.0334,0.4093],[0.3063,-0.0325,0.3964]]]],"fingertips":[[0.3197,0.1298,0.4415],[0.3215,0.0282,0.3835],[0.3201,0.0081,0.3765],[0.3136,-0.0123,0.3826],[0.3063,-0.0325,0.3964]]},{"t":0.2333,"visible":true,"palm_position":[0.2502,0.0011,0.4498],"palm_direction":[0.9999,-0.0104,-0.0073],"palm_normal":[-0.0073,0.0016,-1.0],"z_rotation":-0.0104,"fingers":[[[[0.2547,0.043,0.4452],[0.2722,0.0687,0.4453]],[[0.2722,0.0687,0.4453],[0.2939,0.0971,0.4435]],[[0.2939,0.0971,0.4435],[0.3077,0.1155,0.443]],[[0.3077,0.1155,0.443],[0.3198,0.1322,0.4414]]],[[[0.2492,0.0265,0.4505],[0.3047,0.0294,0.4489]],[[0.3047,0.0294,0.4489],[0.3333,0.0295,0.4215]],[[0.3333,0.0295,0.4215],[0.332,0.029,0.3975]],[[0.332,0.029,0.3975],[0.3234,0.0294,0.3831]]],[[[0.2502,0.009,0.4501],[0.303,0.0085,0.45]],[[0.303,0.0085,0.45],[0.3333,0.0084,0.4192]],[[0.3333,0.0084,0.4192],[0.3337,0.0087,0.3923]],[[0.3337,0.0087,0.3923],[0.3216,0.0091,0.3768]]],[[[0.2503,-0.0077,0.4505],[0.2988,-0.0093,0.4491]],[[0.2988,-0.0093,0.4491],[0.3254,-0.0103,0.4208]],[[0.3254,-0.0103,0.4208],[0.326,-0.0114,0.3962]],[[0.326,-0.0114,0.3962],[0.3147,-0.0097,0.3812]]],[[[0.2501,-0.026,0.4504],[0.2943,-0.0299,0.4496]],[[0.2943,-0.0299,0.4496],[0.317,-0.0316,0.4275]],[[0.317,-0.0316,0.4275],[0.3166,-0.032,0.4089]],[[0.3166,-0.032,0.4089],[0.307,-0.0313,0.3957]]]],"fingertips":[[0.3198,0.1322,0.4414],[0.3234,0.0294,0.3831],[0.3216,0.0091,0.3768],[0.3147,-0.0097,0.3812],[0.307,-0.0313,0.3957]]},{"t":0.2667,"visible":true,"palm_position":[0.2503,0.0005,0.45],"palm_direction":[1.0,-0.0053,-0.007],"palm_normal":[-0.0069,0.006,-1.0],"z_rotation":-0.0053,"fingers":[[[[0.2545,0.0419,0.446],[0.2735,0.0674,0.4463]],[[0.2735,0.0674,0.4463],[0.2933,0.0951,0.4432]],[[0.2933,0.0951,0.4432],[0.3085,0.1154,0.4423]],[[0.3085,0.1154,0.4423],[0.3211,0.1301,0.4419]]],[[[0.2511,0.0251,0.4495],[0.3057,0.0277,0.4505]],[[0.3057,0.0277,0.4505],[0.3327,0.03,0.4216]],[[0.3327,0.03,0.4216],[0.3328,0.0292,0.3977]],[[0.3328,0.0292,0.3977],[0.3215,0.029,0.3828]]],[[[0.2507,0.0079,0.4509],[0.3022,0.0079,0.4507]],[[0.3022,0.0079,0.4507],[0.3341,0.0084,0.4183]],[[0.3341,0.0084,0.4183],[0.3329,0.0081,0.3916]],[[0.3329,0.0081,0.3916],[0.3225,0.0087,0.3764]]],[[[0.2505,-0.0085,0.4505],[0.2987,-0.0106,0.4501]],[[0.2987,-0.0106,0.4501],[0.3276,-0.0113,0.4215]],[[0.3276,-0.0113,0.4215],[0.3271,-0.0115,0.396]],[[0.3271,-0.0115,0.396],[0.3158,-0.0116,0.3818]]],[[[0.2505,-0.0266,0.4497],[0.2949,-0.0308,0.4506]],[[0.2949,-0.0308,0.4506],[0.3165,-0.0328,0.429]],[[0.3165,-0.0328,0.429],[0.3163,-0.0317,0.4096]],[[0.3163,-0.0317,0.4096],[0.3071,-0.0323,0.3963]]]],"fingertips":[[0.3211,0.1301,0.4419],[0.3215,0.029,0.3828],[0.3225,0.0087,0.3764],[0.3158,-0.0116,0.3818],[0.3071,-0.0323,0.3963]]},{"t":0.3,"visible":true,"palm_position":[0.2503,-0.0011,0.4501],"palm_direction":[1.0,-0.0035,0.0066],"palm_normal":[0.0066,-0.0067,-1.0],"z_rotation":-0.0035,"fingers":[[[[0.256,0.041,0.4459],[0.2721,0.0666,0.4462]],[[0.2721,0.0666,0.4462],[0.2925,0.0949,0.4444]],[[0.2925,0.0949,0.4444],[0.3079,0.1136,0.4423]],[[0.3079,0.1136,0.4423],[0.3209,0.1289,0.4413]]],[[[0.25,0.0236,0.4505],[0.3055,0.0264,0.4497]],[[0.3055,0.0264,0.4497],[0.3331,0.0286,0.4217]],[[0.3331,0.0286,0.4217],[0.3331,0.0279,0.3975]],[[0.3331,0.0279,0.3975],[0.3225,0.0266,0.3839]]],[[[0.2499,0.0067,0.4508],[0.3024,0.007,0.4498]],[[0.3024,0.007,0.4498],[0.3325,0.007,0.4194]],[[0.3325,0.007,0.4194],[0.3324,0.0076,0.3913]],[[0.3324,0.0076,0.3913],[0.3213,0.0072,0.3765]]],[[[0.2507,-0.0104,0.4496],[0.2974,-0.0126,0.4496]],[[0.2974,-0.0126,0.4496],[0.3257,-0.0129,0.4213]],[[0.3257,-0.0129,0.4213],[0.325,-0.0118,0.3963]],[[0.325,-0.0118,0.3963],[0.3148,-0.012,0.3827]]],[[[0.2498,-0.0288,0.4496],[0.2957,-0.0322,0.4497]],[[0.2957,-0.0322,0.4497],[0.3168,-0.0334,0.4274]],[[0.3168,-0.0334,0.4274],[0.3164,-0.0347,0.4102]],[[0.3164,-0.0347,0.4102],[0.3081,-0.0327,0.3961]]]],"fingertips":[[0.3209,0.1289,0.4413],[0.3225,0.0266,0.3839],[0.3213,0.0072,0.3765],[0.3148,-0.012,0.3827],[0.3081,-0.0327,0.3961]]},{"t":0.3333,"visible":true,"palm_position":[0.2495,-0.0,0.4507],"palm_direction":[1.0,0.0071,-0.0015],"palm_normal":[-0.0016,0.0029,-1.0],"z_rotation":0.0071,"fingers":[[[[0.2544,0.0423,0.4471],[0.2716,0.0663,0.4467]],[[0.2716,0.0663,0.4467],[0.2925,0.0964,0.4446]],[[0.2925,0.0964,0.4446],[0.3058,0.1146,0.4447]],[[0.3058,0.1146,0.4447],[0.3199,0.1303,0.4425]]],[[[0.2498,0.0252,0.4504],[0.3045,0.0278,0.4504]],[[0.3045,0.0278,0.4504],[0.332,0.0292,0.4227]],[[0.332,0.0292,0.4227],[0.3325,0.0294,0.3985]],[[0.3325,0.0294,0.3985],[0.3229,0.0287,0.3842]]],[[[0.2505,0.008,0.4508],[0.302,0.0088,0.4509]],[[0.302,0.0088,0.4509],[0.3326,0.008,0.4188]],[[0.3326,0.008,0.4188],[0.3326,0.0078,0.3915]],[[0.3326,0.0078,0.3915],[0.3208,0.0071,0.3765]]],[[[0.2495,-0.0095,0.4512],[0.2968,-0.0108,0.451]],[[0.2968,-0.0108,0.451],[0.3263,-0.0116,0.4224]],[[0.3263,-0.0116,0.4224],[0.3253,-0.0121,0.3978]],[[0.3253,-0.0121,0.3978],[0.3143,-0.0114,0.3826]]],[[[0.2497,-0.0272,0.4518],[0.294,-0.0309,0.4508]],[[0.294,-0.0309,0.4508],[0.3163,-0.0328,0.4289]],[[0.3163,-0.0328,0.4289],[0.3163,-0.0337,0.4097]],[[0.3163,-0.0337,0.4097],[0.3058,-0.032,0.3961]]]],"fingertips":[[0.3199,0.1303,0.4425],[0.3229,0.0287,0.3842],[0.3208,0.0071,0.3765],[0.3143,-0.0114,0.3826],[0.3058,-0.032,0.3961]]},{"t":0.3667,"visible":true,"palm_position":[0.2495,-0.0005,0.4491],"palm_direction":[1.0,0.0012,0.0007],"palm_normal":[0.0007,0.0108,-0.9999],"z_rotation":0.0012,"fingers":[[[[0.2541,0.0405,0.4448],[0.2713,0.0669,0.4457]],[[0.2713,0.0669,0.4457],[0.292,0.0966,0.4441]],[[0.292,0.0966,0.4441],[0.3076,0.1146,0.4431]],[[0.3076,0.1146,0.4431],[0.3198,0.1297,0.4405]]],[[[0.2489,0.0248,0.449],[0.3046,0.0275,0.4485]],[[0.3046,0.0275,0.4485],[0.3332,0.0282,0.421]],[[0.3332,0.0282,0.421],[0.3314,0.0288,0.3962]],[[0.3314,0.0288,0.3962],[0.3217,0.0278,0.3809]]],[[[0.249,0.0076,0.4494],[0.3008,0.0065,0.4486]],[[0.3008,0.0065,0.4486],[0.3323,0.0072,0.4173]],[[0.3323,0.0072,0.4173],[0.3325,0.008,0.3911]],[[0.3325,0.008,0.3911],[0.3204,0.0076,0.3753]]],[[[0.2488,-0.009,0.4491],[0.2973,-0.0107,0.4494]],[[0.2973,-0.0107,0.4494],[0.326,-0.0119,0.4209]],[[0.326,-0.0119,0.4209],[0.3246,-0.0127,0.3961]],[[0.3246,-0.0127,0.3961],[0.3143,-0.0121,0.3812]]],[[[0.2503,-0.0268,0.4495],[0.2943,-0.031,0.4493]],[[0.2943,-0.031,0.4493],[0.316,-0.0328,0.4272]],[[0.316,-0.0328,0.4272],[0.3154,-0.0328,0.4079]],[[0.3154,-0.0328,0.4079],[0.3067,-0.0334,0.395]]]],"fingertips":[[0.3198,0.1297,0.4405],[0.3217,0.0278,0.3809],[0.3204,0.0076,0.3753],[0.3143,-0.0121,0.3812],[0.3067,-0.0334,0.395]]},{"t":0.4,"visible":true,"palm_position":[0.2501,0.0001,0.4497],"palm_direction":[0.9999,-0.0106,0.0006],"palm_normal":[0.0006,0.002,-1.0],"z_rotation":-0.0106,"fingers":[[[[0.2556,0.0421,0.4459],[0.2713,0.067,0.4451]],[[0.2713,0.067,0.4451],[0.2934,0.0961,0.4433]],[[0.2934,0.0961,0.4433],[0.3068,0.1145,0.4429]],[[0.3068,0.1145,0.4429],[0.3205,0.1307,0.44]]],[[[0.2487,0.0248,0.4495],[0.3047,0.028,0.4496]],[[0.3047,0.028,0.4496],[0.3325,0.0288,0.4213]],[[0.3325,0.0288,0.4213],[0.3328,0.0292,0.3983]],[[0.3328,0.0292,0.3983],[0.322,0.0288,0.3821]]],[[[0.2499,0.0084,0.4499],[0.302,0.0083,0.4497]],[[0.302,0.0083,0.4497],[0.332,0.0065,0.4195]],[[0.332,0.0065,0.4195],[0.333,0.0081,0.3905]],[[0.333,0.0081,0.3905],[0.3208,0.0088,0.3746]]],[[[0.2499,-0.0085,0.4497],[0.2984,-0.0109,0.4509]],[[0.2984,-0.0109,0.4509],[0.3256,-0.0126,0.4213]],[[0.3256,-0.0126,0.4213],[0.3265,-0.0119,0.3967]],[[0.3265,-0.0119,0.3967],[0.3149,-0.0121,0.3823]]],[[[0.2508,-0.0261,0.4494],[0.2943,-0.0315,0.4495]],[[0.2943,-0.0315,0.4495],[0.3169,-0.0326,0.4269]],[[0.3169,-0.0326,0.4269],[0.3164,-0.0328,0.4086]],[[0.3164,-0.0328,0.4086],[0.3069,-0.0321,0.396]]]],"fingertips":[[0.3205,0.1307,0.44],[0.322,0.0288,0.3821],[0.3208,0.0088,0.3746],[0.3149,-0.0121,0.3823],[0.3069,-0.0321,0.396]]},{"t":0.4333,"visible":true,"palm_position":[0.2484,-0.0001,0.4502],"palm_direction":[0.9999,0.0125,-0.0035],"palm_normal":[-0.0036,0.0064,-1.0],"z_rotation":0.0125,"fingers":[[[[0.2537,0.0417,0.4466],[0.2703,0.0666,0.4459]],[[0.2703,0.0666,0.4459],[0.2915,0.0955,0.4436]],[[0.2915,0.0955,0.4436],[0.307,0.1139,0.4429]],[[0.307,0.1139,0.4429],[0.3189,0.1305,0.4418]]],[[[0.2488,0.0255,0.4503],[0.3048,0.0271,0.4503]],[[0.3048,0.0271,0.4503],[0.3313,0.0288,0.4218]],[[0.3313,0.0288,0.4218],[0.3318,0.0287,0.3974]],[[0.3318,0.0287,0.3974],[0.3209,0.0288,0.3841]]],[[[0.249,0.008,0.45],[0.3005,0.0078,0.4495]],[[0.3005,0.0078,0.4495],[0.3314,0.0078,0.4187]],[[0.3314,0.0078,0.4187],[0.3308,0.0087,0.3922]],[[0.3308,0.0087,0.3922],[0.3203,0.0076,0.376]]],[[[0.2483,-0.009,0.45],[0.2963,-0.0106,0.4503]],[[0.2963,-0.0106,0.4503],[0.324,-0.0124,0.4214]],[[0.324,-0.0124,0.4214],[0.3242,-0.0127,0.3966]],[[0.3242,-0.0127,0.3966],[0.3139,-0.0117,0.3817]]],[[[0.2481,-0.0271,0.4504],[0.2937,-0.0312,0.4495]],[[0.2937,-0.0312,0.4495],[0.3157,-0.033,0.4283]],[[0.3157,-0.033,0.4283],[0.3148,-0.0336,0.409]],[[0.3148,-0.0336,0.409],[0.3054,-0.0317,0.3962]]]],"fingertips":[[0.3189,0.1305,0.4418],[0.3209,0.0288,0.3841],[0.3203,0.0076,0.376],[0.3139,-0.0117,0.3817],[0.3054,-0.0317,0.3962]]},{"t":0.4667,"visible":true,"palm_position":[0.2488,-0.0001,0.4502],"palm_direction":[1.0,-0.0061,0.0],"palm_normal":[-0.0,-0.0076,-1.0],"z_rotation":-0.0061,"fingers":[[[[0.2545,0.0425,0.4466],[0.27,0.067,0.4461]],[[0.27,0.067,0.4461],[0.2916,0.096,0.4447]],[[0.2916,0.096,0.4447],[0.3062,0.1147,0.4429]],[[0.3062,0.1147,0.4429],[0.3191,0.1301,0.4417]]],[[[0.2478,0.0247,0.4493],[0.3035,0.0279,0.4502]],[[0.3035,0.0279,0.4502],[0.3317,0.0291,0.4225]],[[0.3317,0.0291,0.4225],[0.3309,0.0294,0.3969]],[[0.3309,0.0294,0.3969],[0.3206,0.0286,0.3827]]],[[[0.2489,0.0082,0.4496],[0.3007,0.0077,0.4492]],[[0.3007,0.0077,0.4492],[0.3316,0.0075,0.4195]],[[0.3316,0.0075,0.4195],[0.3309,0.0087,0.3916]],[[0.3309,0.0087,0.3916],[0.3211,0.0081,0.3767]]],[[[0.2492,-0.0087,0.4509],[0.2976,-0.0112,0.4495]],[[0.2976,-0.0112,0.4495],[0.3235,-0.0124,0.4221]],[[0.3235,-0.0124,0.4221],[0.3247,-0.0121,0.3965]],[[0.3247,-0.0121,0.3965],[0.3136,-0.0119,0.3823]]],[[[0.2479,-0.0268,0.4494],[0.2935,-0.0315,0.45]],[[0.2935,-0.0315,0.45],[0.3148,-0.0337,0.428]],[[0.3148,-0.0337,0.428],[0.3145,-0.0319,0.4089]],[[0.3145,-0.0319,0.4089],[0.3053,-0.0325,0.3956]]]],"fingertips":[[0.3191,0.1301,0.4417],[0.3206,0.0286,0.3827],[0.3211,0.0081,0.3767],[0.3136,-0.0119,0.3823],[0.3053,-0.0325,0.3956]]},{"t":0.5,"visible":true,"palm_position":[0.2496,-0.0001,0.45],"palm_direction":[1.0,-0.0002,0.0072],"palm_normal":[0.0072,0.0054,-1.0],"z_rotation":-0.0002,"fingers":[[[[0.2546,0.0421,0.4462],[0.2718,0.0663,0.446]],[[0.2718,0.0663,0.446],[0.2925,0.096,0.4446]],[[0.2925,0.096,0.4446],[0.3071,0.1141,0.4432]],[[0.3071,0.1141,0.4432],[0.3192,0.1299,0.4407]]],[[[0.25,0.0248,0.4488],[0.3049,0.0287,0.4509]],[[0.3049,0.0287,0.4509],[0.3323,0.0291,0.4218]],[[0.3323,0.0291,0.4218],[0.3327,0.0291,0.397]],[[0.3327,0.0291,0.397],[0.3221,0.0288,0.3823]]],[[[0.2494,0.0081,0.45],[0.3019,0.0083,0.4502]],[[0.3019,0.0083,0.4502],[0.3325,0.0072,0.419]],[[0.3325,0.0072,0.419],[0.3329,0.0089,0.3916]],[[0.3329,0.0089,0.3916],[0.321,0.0086,0.377]]],[[[0.2498,-0.0087,0.4496],[0.2979,-0.0114,0.4499]],[[0.2979,-0.0114,0.4499],[0.3256,-0.0124,0.4204]],[[0.3256,-0.0124,0.4204],[0.3249,-0.0119,0.3965]],[[0.3249,-0.0119,0.3965],[0.3145,-0.0115,0.3823]]],[[[0.25,-0.0275,0.45],[0.2943,-0.0316,0.4492]],[[0.2943,-0.0316,0.4492],[0.3161,-0.0335,0.429]],[[0.3161,-0.0335,0.429],[0.3158,-0.0332,0.4087]],[[0.3158,-0.0332,0.4087],[0.3074,-0.0327,0.3959]]]],"fingertips":[[0.3192,0.1299,0.4407],[0.3221,0.0288,0.3823],[0.321,0.0086,0.377],[0.3145,-0.0115,0.3823],[0.3074,-0.0327,0.3959]]},{"t":0.5333,"visible":true,"palm_position":[0.2495,-0.0002,0.4505],"palm_direction":[1.0,0.0083,-0.0033],"palm_normal":[-0.0033,-0.0014,-1.0],"z_rotation":0.0083,"fingers":[[[[0.2553,0.0415,0.4464],[0.271,0.0652,0.446]],[[0.271,0.0652,0.446],[0.2931,0.0954,0.4439]],[[0.2931,0.0954,0.4439],[0.3073,0.1147,0.4438]],[[0.3073,0.1147,0.4438],[0.3201,0.1301,0.442]]],[[[0.2486,0.0254,0.4506],[0.3049,0.0281,0.4503]],[[0.3049,0.0281,0.4503],[0.3324,0.0285,0.421]],[[0.3324,0.0285,0.421],[0.3321,0.029,0.3975]],[[0.3321,0.029,0.3975],[0.3219,0.0285,0.3837]]],[[[0.2491,0.0069,0.4509],[0.3018,0.0077,0.4503]],[[0.3018,0.0077,0.4503],[0.3322,0.0077,0.4189]],[[0.3322,0.0077,0.4189],[0.331,0.0082,0.3914]],[[0.331,0.0082,0.3914],[0.3207,0.0076,0.3769]]],[[[0.2486,-0.0086,0.4508],[0.2978,-0.0105,0.4501]],[[0.2978,-0.0105,0.4501],[0.3239,-0.0121,0.4227]],[[0.3239,-0.0121,0.4227],[0.3257,-0.0125,0.397]],[[0.3257,-0.0125,0.397],[0.3147,-0.0127,0.3821]]],[[[0.2491,-0.0264,0.4502],[0.2951,-0.0312,0.4496]],[[0.2951,-0.0312,0.4496],[0.3171,-0.0337,0.4287]],[[0.3171,-0.0337,0.4287],[0.3166,-0.0334,0.4088]],[[0.3166,-0.0334,0.4088],[0.3069,-0.0323,0.3959]]]],"fingertips":[[0.3201,0.1301,0.442],[0.3219,0.0285,0.3837],[0.3207,0.0076,0.3769],[0.3147,-0.0127,0.3821],[0.3069,-0.0323,0.3959]]},{"t":0.5667,"visible":true,"palm_position":[0.251,0.0001,0.4502],"palm_direction":[1.0,-0.0058,0.0045],"palm_normal":[0.0045,0.0018,-1.0],"z_rotation":-0.0058,"fingers":[[[[0.2566,0.0428,0.4468],[0.2721,0.0675,0.446]],[[0.2721,0.0675,0.446],[0.294,0.0954,0.4437]],[[0.294,0.0954,0.4437],[0.3081,0.115,0.4425]],[[0.3081,0.115,0.4425],[0.3207,0.1302,0.4418]]],[[[0.2508,0.025,0.4509],[0.3057,0.0282,0.4497]],[[0.3057,0.0282,0.4497],[0.3341,0.0293,0.4218]],[[0.3341,0.0293,0.4218],[0.3334,0.0287,0.3976]],[[0.3334,0.0287,0.3976],[0.3228,0.0292,0.3836]]],[[[0.2503,0.0084,0.45],[0.3032,0.0079,0.4495]],[[0.3032,0.0079,0.4495],[0.3344,0.0083,0.4183]],[[0.3344,0.0083,0.4183],[0.3326,0.0079,0.3913]],[[0.3326,0.0079,0.3913],[0.3221,0.0084,0.3772]]],[[[0.2508,-0.0082,0.4508],[0.2987,-0.0116,0.4506]],[[0.2987,-0.0116,0.4506],[0.3273,-0.0107,0.4224]],[[0.3273,-0.0107,0.4224],[0.327,-0.0111,0.3962]],[[0.327,-0.0111,0.3962],[0.3162,-0.0116,0.383]]],[[[0.2512,-0.0284,0.4509],[0.2953,-0.0305,0.45]],[[0.2953,-0.0305,0.45],[0.3176,-0.0325,0.4282]],[[0.3176,-0.0325,0.4282],[0.3167,-0.0321,0.4093]],[[0.3167,-0.0321,0.4093],[0.3078,-0.0316,0.3959]]]],"fingertips":[[0.3207,0.1302,0.4418],[0.3228,0.0292,0.3836],[0.3221,0.0084,0.3772],[0.3162,-0.0116,0.383],[0.3078,-0.0316,0.3959]]},{"t":0.6,"visible":true,"palm_position":[0.2499,-0.0002,0.4499],"palm_direction":[1.0,-0.0004,0.0072],"palm_normal":[0.0072,-0.006,-1.0],"z_rotation":-0.0004,"fingers":[[[[0.255,0.042,0.4466],[0.2721,0.066,0.4458]],[[0.2721,0.066,0.4458],[0.2934,0.0962,0.4444]],[[0.2934,0.0962,0.4444],[0.307,0.1153,0.4424]],[[0.307,0.1153,0.4424],[0.3204,0.1294,0.4416]]],[[[0.2495,0.0254,0.4508],[0.3054,0.027,0.4494]],[[0.3054,0.027,0.4494],[0.3325,0.0293,0.4216]],[[0.3325,0.0293,0.4216],[0.3327,0.0291,0.3977]],[[0.3327,0.0291,0.3977],[0.3223,0.0293,0.3829]]],[[[0.25,0.0069,0.4492],[0.3016,0.0072,0.45]],[[0.3016,0.0072,0.45],[0.3333,0.0076,0.4183]],[[0.3333,0.0076,0.4183],[0.3322,0.0079,0.3913]],[[0.3322,0.0079,0.3913],[0.3215,0.008,0.3764]]],[[[0.2503,-0.0092,0.45],[0.2987,-0.0111,0.4503]],[[0.2987,-0.0111,0.4503],[0.326,-0.0125,0.4212]],[[0.326,-0.0125,0.4212],[0.3252,-0.0122,0.3961]],[[0.3252,-0.0122,0.3961],[0.3148,-0.0112,0.3818]]],[[[0.2505,-0.0271,0.4503],[0.2944,-0.0311,0.4512]],[[0.2944,-0.0311,0.4512],[0.3168,-0.0327,0.428]],[[0.3168,-0.0327,0.428],[0.3166,-0.0337,0.4084]],[[0.3166,-0.0337,0.4084],[0.307,-0.0319,0.3957]]]],"fingertips":[[0.3204,0.1294,0.4416],[0.3223,0.0293,0.3829],[0.3215,0.008,0.3764],[0.3148,-0.0112,0.3818],[0.307,-0.0319,0.3957]]},{"t":0.6333,"visible":true,"palm_position":[0.2503,0.0005,0.4505],"palm_direction":[1.0,0.0043,-0.0028],"palm_normal":[-0.0028,0.001,-1.0],"z_rotation":0.0043,"fingers":[[[[0.2544,0.042,0.4462],[0.2717,0.0674,0.4459]],[[0.2717,0.0674,0.4459],[0.2933,0.0959,0.4444]],[[0.2933,0.0959,0.4444],[0.3082,0.1156,0.4431]],[[0.3082,0.1156,0.4431],[0.3206,0.131,0.4419]]],[[[0.2511,0.0253,0.4507],[0.3054,0.0281,0.4499]],[[0.3054,0.0281,0.4499],[0.3336,0.0298,0.422]],[[0.3336,0.0298,0.422],[0.333,0.0297,0.3976]],[[0.333,0.0297,0.3976],[0.3225,0.0282,0.3834]]],[[[0.2495,0.0083,0.4508],[0.3021,0.0083,0.4507]],[[0.3021,0.0083,0.4507],[0.333,0.0083,0.4189]],[[0.333,0.0083,0.4189],[0.3336,0.0088,0.3924]],[[0.3336,0.0088,0.3924],[0.321,0.0088,0.3761]]],[[[0.2505,-0.0091,0.4514],[0.2974,-0.0098,0.4509]],[[0.2974,-0.0098,0.4509],[0.3254,-0.0117,0.4227]],[[0.3254,-0.0117,0.4227],[0.3265,-0.0124,0.3967]],[[0.3265,-0.0124,0.3967],[0.3148,-0.0116,0.3821]]],[[[0.2512,-0.0264,0.4503],[0.2949,-0.0302,0.4508]],[[0.2949,-0.0302,0.4508],[0.3163,-0.0318,0.4278]],[[0.3163,-0.0318,0.4278],[0.3164,-0.0322,0.4102]],[[0.3164,-0.0322,0.4102],[0.307,-0.0315,0.3971]]]],"fingertips":[[0.3206,0.131,0.4419],[0.3225,0.0282,0.3834],[0.321,0.0088,0.3761],[0.3148,-0.0116,0.3821],[0.307,-0.0315,0.3971]]},{"t":0.6667,"visible":true,"palm_position":[0.25,-0.0008,0.4499],"palm_direction":[1.0,-0.0069,0.0046],"palm_normal":[0.0047,0.0085,-1.0],"z_rotation":-0.0069,"fingers":[[[[0.2549,0.042,0.4448],[0.2714,0.0666,0.4456]],[[0.2714,0.0666,0.4456],[0.2927,0.0952,0.4447]],[[0.2927,0.0952,0.4447],[0.3073,0.1144,0.4426]],[[0.3073,0.1144,0.4426],[0.32,0.1295,0.4417]]],[[[0.2494,0.024,0.4501],[0.3042,0.0261,0.4501]],[[0.3042,0.0261,0.4501],[0.3329,0.0283,0.4214]],[[0.3329,0.0283,0.4214],[0.3321,0.0298,0.3969]],[[0.3321,0.0298,0.3969],[0.3218,0.0271,0.3826]]],[[[0.2507,0.0072,0.4501],[0.3017,0.0081,0.4499]],[[0.3017,0.0081,0.4499],[0.3322,0.0076,0.4183]],[[0.3322,0.0076,0.4183],[0.3328,0.0072,0.3916]],[[0.3328,0.0072,0.3916],[0.3214,0.0067,0.3754]]],[[[0.2504,-0.0099,0.45],[0.2977,-0.0128,0.4492]],[[0.2977,-0.0128,0.4492],[0.3267,-0.0133,0.4212]],[[0.3267,-0.0133,0.4212],[0.3249,-0.0131,0.3962]],[[0.3249,-0.0131,0.3962],[0.3149,-0.0125,0.3815]]],[[[0.2496,-0.0278,0.45],[0.2947,-0.031,0.4499]],[[0.2947,-0.031,0.4499],[0.3165,-0.0341,0.4283]],[[0.3165,-0.0341,0.4283],[0.3157,-0.0346,0.4083]],[[0.3157,-0.0346,0.4083],[0.3071,-0.0335,0.3965]]]],"fingertips":[[0.32,0.1295,0.4417],[0.3218,0.0271,0.3826],[0.3214,0.0067,0.3754],[0.3149,-0.0125,0.3815],[0.3071,-0.0335,0.3965]]}]};
