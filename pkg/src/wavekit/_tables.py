"""Wavelet filter bank tables.  Generated by scripts/generate_filter_tables.py;
do not edit by hand."""

FILTER_BANKS = {
    "haar": {
        "orthogonal": True,
        "dec_lo": [0.7071067811865476, 0.7071067811865476],
        "dec_hi": [0.7071067811865476, -0.7071067811865476],
        "rec_lo": [0.7071067811865476, 0.7071067811865476],
        "rec_hi": [-0.7071067811865476, 0.7071067811865476],
        "offsets": (0, 0, 0),
    },
    "db1": {
        "orthogonal": True,
        "dec_lo": [0.7071067811865476, 0.7071067811865476],
        "dec_hi": [0.7071067811865476, -0.7071067811865476],
        "rec_lo": [0.7071067811865476, 0.7071067811865476],
        "rec_hi": [-0.7071067811865476, 0.7071067811865476],
        "offsets": (0, 0, 0),
    },
    "db2": {
        "orthogonal": True,
        "dec_lo": [-0.12940952255126037, 0.2241438680420134, 0.8365163037378079, 0.48296291314453416],
        "dec_hi": [0.48296291314453416, -0.8365163037378079, 0.2241438680420134, 0.12940952255126037],
        "rec_lo": [0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037],
        "rec_hi": [0.12940952255126037, 0.2241438680420134, -0.8365163037378079, 0.48296291314453416],
        "offsets": (0, 0, 0),
    },
    "db3": {
        "orthogonal": True,
        "dec_lo": [0.03522629188570953, -0.08544127388202666, -0.13501102001025458, 0.45987750211849154, 0.8068915093110925, 0.33267055295008263],
        "dec_hi": [0.33267055295008263, -0.8068915093110925, 0.45987750211849154, 0.13501102001025458, -0.08544127388202666, -0.03522629188570953],
        "rec_lo": [0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458, -0.08544127388202666, 0.03522629188570953],
        "rec_hi": [-0.03522629188570953, -0.08544127388202666, 0.13501102001025458, 0.45987750211849154, -0.8068915093110925, 0.33267055295008263],
        "offsets": (0, 0, 0),
    },
    "db4": {
        "orthogonal": True,
        "dec_lo": [-0.010597401785069032, 0.0328830116668852, 0.030841381835560764, -0.18703481171909309, -0.027983769416859854, 0.6308807679298589, 0.7148465705529157, 0.2303778133088965],
        "dec_hi": [0.2303778133088965, -0.7148465705529157, 0.6308807679298589, 0.027983769416859854, -0.18703481171909309, -0.030841381835560764, 0.0328830116668852, 0.010597401785069032],
        "rec_lo": [0.2303778133088965, 0.7148465705529157, 0.6308807679298589, -0.027983769416859854, -0.18703481171909309, 0.030841381835560764, 0.0328830116668852, -0.010597401785069032],
        "rec_hi": [0.010597401785069032, 0.0328830116668852, -0.030841381835560764, -0.18703481171909309, 0.027983769416859854, 0.6308807679298589, -0.7148465705529157, 0.2303778133088965],
        "offsets": (0, 0, 0),
    },
    "db5": {
        "orthogonal": True,
        "dec_lo": [0.0033357252854737712, -0.012580751999081999, -0.006241490212798274, 0.07757149384004572, -0.032244869584638375, -0.24229488706638203, 0.13842814590132074, 0.7243085284377729, 0.6038292697971896, 0.16010239797419293],
        "dec_hi": [0.16010239797419293, -0.6038292697971896, 0.7243085284377729, -0.13842814590132074, -0.24229488706638203, 0.032244869584638375, 0.07757149384004572, 0.006241490212798274, -0.012580751999081999, -0.0033357252854737712],
        "rec_lo": [0.16010239797419293, 0.6038292697971896, 0.7243085284377729, 0.13842814590132074, -0.24229488706638203, -0.032244869584638375, 0.07757149384004572, -0.006241490212798274, -0.012580751999081999, 0.0033357252854737712],
        "rec_hi": [-0.0033357252854737712, -0.012580751999081999, 0.006241490212798274, 0.07757149384004572, 0.032244869584638375, -0.24229488706638203, -0.13842814590132074, 0.7243085284377729, -0.6038292697971896, 0.16010239797419293],
        "offsets": (0, 0, 0),
    },
    "db6": {
        "orthogonal": True,
        "dec_lo": [-0.0010773010853084796, 0.004777257510945511, 0.0005538422011614961, -0.03158203931748603, 0.027522865530305727, 0.09750160558732304, -0.12976686756726194, -0.22626469396543983, 0.31525035170919763, 0.7511339080210954, 0.49462389039845306, 0.11154074335010947],
        "dec_hi": [0.11154074335010947, -0.49462389039845306, 0.7511339080210954, -0.31525035170919763, -0.22626469396543983, 0.12976686756726194, 0.09750160558732304, -0.027522865530305727, -0.03158203931748603, -0.0005538422011614961, 0.004777257510945511, 0.0010773010853084796],
        "rec_lo": [0.11154074335010947, 0.49462389039845306, 0.7511339080210954, 0.31525035170919763, -0.22626469396543983, -0.12976686756726194, 0.09750160558732304, 0.027522865530305727, -0.03158203931748603, 0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796],
        "rec_hi": [0.0010773010853084796, 0.004777257510945511, -0.0005538422011614961, -0.03158203931748603, -0.027522865530305727, 0.09750160558732304, 0.12976686756726194, -0.22626469396543983, -0.31525035170919763, 0.7511339080210954, -0.49462389039845306, 0.11154074335010947],
        "offsets": (0, 0, 0),
    },
    "db7": {
        "orthogonal": True,
        "dec_lo": [0.00035371379997452024, -0.0018016407040474908, 0.0004295779729213665, 0.01255099855609984, -0.01657454163066688, -0.03802993693501441, 0.08061260915108308, 0.07130921926683026, -0.22403618499387498, -0.14390600392856498, 0.4697822874051931, 0.7291320908462351, 0.3965393194819173, 0.07785205408500918],
        "dec_hi": [0.07785205408500918, -0.3965393194819173, 0.7291320908462351, -0.4697822874051931, -0.14390600392856498, 0.22403618499387498, 0.07130921926683026, -0.08061260915108308, -0.03802993693501441, 0.01657454163066688, 0.01255099855609984, -0.0004295779729213665, -0.0018016407040474908, -0.00035371379997452024],
        "rec_lo": [0.07785205408500918, 0.3965393194819173, 0.7291320908462351, 0.4697822874051931, -0.14390600392856498, -0.22403618499387498, 0.07130921926683026, 0.08061260915108308, -0.03802993693501441, -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665, -0.0018016407040474908, 0.00035371379997452024],
        "rec_hi": [-0.00035371379997452024, -0.0018016407040474908, -0.0004295779729213665, 0.01255099855609984, 0.01657454163066688, -0.03802993693501441, -0.08061260915108308, 0.07130921926683026, 0.22403618499387498, -0.14390600392856498, -0.4697822874051931, 0.7291320908462351, -0.3965393194819173, 0.07785205408500918],
        "offsets": (0, 0, 0),
    },
    "db8": {
        "orthogonal": True,
        "dec_lo": [-0.00011747678412476953, 0.0006754494064505693, -0.00039174037337694705, -0.004870352993451574, 0.008746094047405777, 0.013981027917398282, -0.044088253930794755, -0.017369301001807547, 0.12874742662047847, 0.0004724845739132828, -0.2840155429615469, -0.015829105256349306, 0.5853546836542067, 0.6756307362972898, 0.31287159091429995, 0.05441584224310401],
        "dec_hi": [0.05441584224310401, -0.31287159091429995, 0.6756307362972898, -0.5853546836542067, -0.015829105256349306, 0.2840155429615469, 0.0004724845739132828, -0.12874742662047847, -0.017369301001807547, 0.044088253930794755, 0.013981027917398282, -0.008746094047405777, -0.004870352993451574, 0.00039174037337694705, 0.0006754494064505693, 0.00011747678412476953],
        "rec_lo": [0.05441584224310401, 0.31287159091429995, 0.6756307362972898, 0.5853546836542067, -0.015829105256349306, -0.2840155429615469, 0.0004724845739132828, 0.12874742662047847, -0.017369301001807547, -0.044088253930794755, 0.013981027917398282, 0.008746094047405777, -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693, -0.00011747678412476953],
        "rec_hi": [0.00011747678412476953, 0.0006754494064505693, 0.00039174037337694705, -0.004870352993451574, -0.008746094047405777, 0.013981027917398282, 0.044088253930794755, -0.017369301001807547, -0.12874742662047847, 0.0004724845739132828, 0.2840155429615469, -0.015829105256349306, -0.5853546836542067, 0.6756307362972898, -0.31287159091429995, 0.05441584224310401],
        "offsets": (0, 0, 0),
    },
    "db9": {
        "orthogonal": True,
        "dec_lo": [3.93473203162716e-05, -0.0002519631889427101, 0.00023038576352319597, 0.0018476468830562265, -0.00428150368246343, -0.004723204757751397, 0.022361662123679096, 0.00025094711483145197, -0.06763282906132997, 0.03072568147933338, 0.14854074933810638, -0.09684078322297646, -0.2932737832791749, 0.13319738582500756, 0.6572880780513005, 0.6048231236901112, 0.24383467461259034, 0.038077947363878345],
        "dec_hi": [0.038077947363878345, -0.24383467461259034, 0.6048231236901112, -0.6572880780513005, 0.13319738582500756, 0.2932737832791749, -0.09684078322297646, -0.14854074933810638, 0.03072568147933338, 0.06763282906132997, 0.00025094711483145197, -0.022361662123679096, -0.004723204757751397, 0.00428150368246343, 0.0018476468830562265, -0.00023038576352319597, -0.0002519631889427101, -3.93473203162716e-05],
        "rec_lo": [0.038077947363878345, 0.24383467461259034, 0.6048231236901112, 0.6572880780513005, 0.13319738582500756, -0.2932737832791749, -0.09684078322297646, 0.14854074933810638, 0.03072568147933338, -0.06763282906132997, 0.00025094711483145197, 0.022361662123679096, -0.004723204757751397, -0.00428150368246343, 0.0018476468830562265, 0.00023038576352319597, -0.0002519631889427101, 3.93473203162716e-05],
        "rec_hi": [-3.93473203162716e-05, -0.0002519631889427101, -0.00023038576352319597, 0.0018476468830562265, 0.00428150368246343, -0.004723204757751397, -0.022361662123679096, 0.00025094711483145197, 0.06763282906132997, 0.03072568147933338, -0.14854074933810638, -0.09684078322297646, 0.2932737832791749, 0.13319738582500756, -0.6572880780513005, 0.6048231236901112, -0.24383467461259034, 0.038077947363878345],
        "offsets": (0, 0, 0),
    },
    "db10": {
        "orthogonal": True,
        "dec_lo": [-1.3264202894521244e-05, 9.358867032006959e-05, -0.00011646685512928545, -0.0006858566949597116, 0.001992405295185056, 0.001395351747052901, -0.010733175483330575, 0.0036065535669561697, 0.033212674059341, -0.029457536821875813, -0.07139414716639708, 0.09305736460357235, 0.12736934033579325, -0.19594627437737705, -0.24984642432731538, 0.2811723436605775, 0.6884590394536035, 0.5272011889317256, 0.1881768000776915, 0.026670057900555554],
        "dec_hi": [0.026670057900555554, -0.1881768000776915, 0.5272011889317256, -0.6884590394536035, 0.2811723436605775, 0.24984642432731538, -0.19594627437737705, -0.12736934033579325, 0.09305736460357235, 0.07139414716639708, -0.029457536821875813, -0.033212674059341, 0.0036065535669561697, 0.010733175483330575, 0.001395351747052901, -0.001992405295185056, -0.0006858566949597116, 0.00011646685512928545, 9.358867032006959e-05, 1.3264202894521244e-05],
        "rec_lo": [0.026670057900555554, 0.1881768000776915, 0.5272011889317256, 0.6884590394536035, 0.2811723436605775, -0.24984642432731538, -0.19594627437737705, 0.12736934033579325, 0.09305736460357235, -0.07139414716639708, -0.029457536821875813, 0.033212674059341, 0.0036065535669561697, -0.010733175483330575, 0.001395351747052901, 0.001992405295185056, -0.0006858566949597116, -0.00011646685512928545, 9.358867032006959e-05, -1.3264202894521244e-05],
        "rec_hi": [1.3264202894521244e-05, 9.358867032006959e-05, 0.00011646685512928545, -0.0006858566949597116, -0.001992405295185056, 0.001395351747052901, 0.010733175483330575, 0.0036065535669561697, -0.033212674059341, -0.029457536821875813, 0.07139414716639708, 0.09305736460357235, -0.12736934033579325, -0.19594627437737705, 0.24984642432731538, 0.2811723436605775, -0.6884590394536035, 0.5272011889317256, -0.1881768000776915, 0.026670057900555554],
        "offsets": (0, 0, 0),
    },
    "sym2": {
        "orthogonal": True,
        "dec_lo": [-0.12940952255126037, 0.2241438680420134, 0.8365163037378079, 0.48296291314453416],
        "dec_hi": [0.48296291314453416, -0.8365163037378079, 0.2241438680420134, 0.12940952255126037],
        "rec_lo": [0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037],
        "rec_hi": [0.12940952255126037, 0.2241438680420134, -0.8365163037378079, 0.48296291314453416],
        "offsets": (0, 0, 0),
    },
    "sym3": {
        "orthogonal": True,
        "dec_lo": [0.03522629188570953, -0.08544127388202666, -0.13501102001025458, 0.45987750211849154, 0.8068915093110925, 0.33267055295008263],
        "dec_hi": [0.33267055295008263, -0.8068915093110925, 0.45987750211849154, 0.13501102001025458, -0.08544127388202666, -0.03522629188570953],
        "rec_lo": [0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458, -0.08544127388202666, 0.03522629188570953],
        "rec_hi": [-0.03522629188570953, -0.08544127388202666, 0.13501102001025458, 0.45987750211849154, -0.8068915093110925, 0.33267055295008263],
        "offsets": (0, 0, 0),
    },
    "sym4": {
        "orthogonal": True,
        "dec_lo": [0.032223100604051466, -0.012603967262031304, -0.09921954357663353, 0.29785779560530606, 0.8037387518051321, 0.497618667632775, -0.029635527646002493, -0.07576571478950221],
        "dec_hi": [-0.07576571478950221, 0.029635527646002493, 0.497618667632775, -0.8037387518051321, 0.29785779560530606, 0.09921954357663353, -0.012603967262031304, -0.032223100604051466],
        "rec_lo": [-0.07576571478950221, -0.029635527646002493, 0.497618667632775, 0.8037387518051321, 0.29785779560530606, -0.09921954357663353, -0.012603967262031304, 0.032223100604051466],
        "rec_hi": [-0.032223100604051466, -0.012603967262031304, 0.09921954357663353, 0.29785779560530606, -0.8037387518051321, 0.497618667632775, 0.029635527646002493, -0.07576571478950221],
        "offsets": (0, 0, 0),
    },
    "sym5": {
        "orthogonal": True,
        "dec_lo": [0.019538882735249827, -0.021101834024689042, -0.17532808990805623, 0.01660210576451085, 0.633978963456792, 0.7234076904040407, 0.19939753397685558, -0.039134249302313844, 0.02951949092570626, 0.027333068344998768],
        "dec_hi": [0.027333068344998768, -0.02951949092570626, -0.039134249302313844, -0.19939753397685558, 0.7234076904040407, -0.633978963456792, 0.01660210576451085, 0.17532808990805623, -0.021101834024689042, -0.019538882735249827],
        "rec_lo": [0.027333068344998768, 0.02951949092570626, -0.039134249302313844, 0.19939753397685558, 0.7234076904040407, 0.633978963456792, 0.01660210576451085, -0.17532808990805623, -0.021101834024689042, 0.019538882735249827],
        "rec_hi": [-0.019538882735249827, -0.021101834024689042, 0.17532808990805623, 0.01660210576451085, -0.633978963456792, 0.7234076904040407, -0.19939753397685558, -0.039134249302313844, -0.02951949092570626, 0.027333068344998768],
        "offsets": (0, 0, 0),
    },
    "sym6": {
        "orthogonal": True,
        "dec_lo": [-0.00780070832503238, 0.0017677118642540077, 0.04472490177078139, -0.02106029251237085, -0.07263752278637658, 0.3379294217281658, 0.787641141028651, 0.49105594192797375, -0.04831174258569806, -0.11799011114852002, 0.0034907120842221626, 0.015404109327044824],
        "dec_hi": [0.015404109327044824, -0.0034907120842221626, -0.11799011114852002, 0.04831174258569806, 0.49105594192797375, -0.787641141028651, 0.3379294217281658, 0.07263752278637658, -0.02106029251237085, -0.04472490177078139, 0.0017677118642540077, 0.00780070832503238],
        "rec_lo": [0.015404109327044824, 0.0034907120842221626, -0.11799011114852002, -0.04831174258569806, 0.49105594192797375, 0.787641141028651, 0.3379294217281658, -0.07263752278637658, -0.02106029251237085, 0.04472490177078139, 0.0017677118642540077, -0.00780070832503238],
        "rec_hi": [0.00780070832503238, 0.0017677118642540077, -0.04472490177078139, -0.02106029251237085, 0.07263752278637658, 0.3379294217281658, -0.787641141028651, 0.49105594192797375, 0.04831174258569806, -0.11799011114852002, -0.0034907120842221626, 0.015404109327044824],
        "offsets": (0, 0, 0),
    },
    "sym7": {
        "orthogonal": True,
        "dec_lo": [0.0022918339540537714, -0.003283297847466811, -0.01812660513133846, 0.020464207577546033, 0.04474234946835238, -0.1010109208684203, -0.05680447688966697, 0.4836109156822677, 0.7819215932917282, 0.3602184609062602, -0.06413128980738582, -0.06490800354718848, 0.017213376300804502, 0.012015419283549189],
        "dec_hi": [0.012015419283549189, -0.017213376300804502, -0.06490800354718848, 0.06413128980738582, 0.3602184609062602, -0.7819215932917282, 0.4836109156822677, 0.05680447688966697, -0.1010109208684203, -0.04474234946835238, 0.020464207577546033, 0.01812660513133846, -0.003283297847466811, -0.0022918339540537714],
        "rec_lo": [0.012015419283549189, 0.017213376300804502, -0.06490800354718848, -0.06413128980738582, 0.3602184609062602, 0.7819215932917282, 0.4836109156822677, -0.05680447688966697, -0.1010109208684203, 0.04474234946835238, 0.020464207577546033, -0.01812660513133846, -0.003283297847466811, 0.0022918339540537714],
        "rec_hi": [-0.0022918339540537714, -0.003283297847466811, 0.01812660513133846, 0.020464207577546033, -0.04474234946835238, -0.1010109208684203, 0.05680447688966697, 0.4836109156822677, -0.7819215932917282, 0.3602184609062602, 0.06413128980738582, -0.06490800354718848, -0.017213376300804502, 0.012015419283549189],
        "offsets": (0, 0, 0),
    },
    "sym8": {
        "orthogonal": True,
        "dec_lo": [0.001889950332767689, -0.0003029205147241331, -0.014952258337062199, 0.0038087520138944896, 0.04913717967373029, -0.027219029917103486, -0.0519458381078818, 0.36444189483617895, 0.777185751699628, 0.4813596512590534, -0.061273359067811076, -0.14329423835127267, 0.007607487324976609, 0.03169508781152599, -0.0005421323318000107, -0.0033824159510050028],
        "dec_hi": [-0.0033824159510050028, 0.0005421323318000107, 0.03169508781152599, -0.007607487324976609, -0.14329423835127267, 0.061273359067811076, 0.4813596512590534, -0.777185751699628, 0.36444189483617895, 0.0519458381078818, -0.027219029917103486, -0.04913717967373029, 0.0038087520138944896, 0.014952258337062199, -0.0003029205147241331, -0.001889950332767689],
        "rec_lo": [-0.0033824159510050028, -0.0005421323318000107, 0.03169508781152599, 0.007607487324976609, -0.14329423835127267, -0.061273359067811076, 0.4813596512590534, 0.777185751699628, 0.36444189483617895, -0.0519458381078818, -0.027219029917103486, 0.04913717967373029, 0.0038087520138944896, -0.014952258337062199, -0.0003029205147241331, 0.001889950332767689],
        "rec_hi": [-0.001889950332767689, -0.0003029205147241331, 0.014952258337062199, 0.0038087520138944896, -0.04913717967373029, -0.027219029917103486, 0.0519458381078818, 0.36444189483617895, -0.777185751699628, 0.4813596512590534, 0.061273359067811076, -0.14329423835127267, -0.007607487324976609, 0.03169508781152599, 0.0005421323318000107, -0.0033824159510050028],
        "offsets": (0, 0, 0),
    },
    "sym9": {
        "orthogonal": True,
        "dec_lo": [0.0002594576273718927, -0.0006273974072228845, -0.001916107013297193, 0.005984552518092256, 0.004067656322053093, -0.029536143419590332, -0.00021895156907497003, 0.08561240171755218, -0.021148031085692288, -0.1432929768081533, 0.2337782884637422, 0.7374707614342205, 0.5926551385706292, 0.08056700235853395, -0.11433430631248108, -0.03484602374285066, 0.013963636183296569, 0.005774604535965781],
        "dec_hi": [0.005774604535965781, -0.013963636183296569, -0.03484602374285066, 0.11433430631248108, 0.08056700235853395, -0.5926551385706292, 0.7374707614342205, -0.2337782884637422, -0.1432929768081533, 0.021148031085692288, 0.08561240171755218, 0.00021895156907497003, -0.029536143419590332, -0.004067656322053093, 0.005984552518092256, 0.001916107013297193, -0.0006273974072228845, -0.0002594576273718927],
        "rec_lo": [0.005774604535965781, 0.013963636183296569, -0.03484602374285066, -0.11433430631248108, 0.08056700235853395, 0.5926551385706292, 0.7374707614342205, 0.2337782884637422, -0.1432929768081533, -0.021148031085692288, 0.08561240171755218, -0.00021895156907497003, -0.029536143419590332, 0.004067656322053093, 0.005984552518092256, -0.001916107013297193, -0.0006273974072228845, 0.0002594576273718927],
        "rec_hi": [-0.0002594576273718927, -0.0006273974072228845, 0.001916107013297193, 0.005984552518092256, -0.004067656322053093, -0.029536143419590332, 0.00021895156907497003, 0.08561240171755218, 0.021148031085692288, -0.1432929768081533, -0.2337782884637422, 0.7374707614342205, -0.5926551385706292, 0.08056700235853395, 0.11433430631248108, -0.03484602374285066, -0.013963636183296569, 0.005774604535965781],
        "offsets": (0, 0, 0),
    },
    "sym10": {
        "orthogonal": True,
        "dec_lo": [-0.0004101159158043983, 0.00034014926631480987, 0.005071649198531799, -0.0011404297952173285, -0.02300546135349751, -0.0008687521096892581, 0.03384235466357522, -0.0670899078083818, -0.08787871151197514, 0.34021601302346216, 0.7669548365606096, 0.5137098733480263, -0.015019238839137859, -0.12155210554854895, 0.026240365058448987, 0.04968612664694288, 0.0005956827837425191, -0.007056764062587304, 0.0007154205420543397, 0.0008625782262259724],
        "dec_hi": [0.0008625782262259724, -0.0007154205420543397, -0.007056764062587304, -0.0005956827837425191, 0.04968612664694288, -0.026240365058448987, -0.12155210554854895, 0.015019238839137859, 0.5137098733480263, -0.7669548365606096, 0.34021601302346216, 0.08787871151197514, -0.0670899078083818, -0.03384235466357522, -0.0008687521096892581, 0.02300546135349751, -0.0011404297952173285, -0.005071649198531799, 0.00034014926631480987, 0.0004101159158043983],
        "rec_lo": [0.0008625782262259724, 0.0007154205420543397, -0.007056764062587304, 0.0005956827837425191, 0.04968612664694288, 0.026240365058448987, -0.12155210554854895, -0.015019238839137859, 0.5137098733480263, 0.7669548365606096, 0.34021601302346216, -0.08787871151197514, -0.0670899078083818, 0.03384235466357522, -0.0008687521096892581, -0.02300546135349751, -0.0011404297952173285, 0.005071649198531799, 0.00034014926631480987, -0.0004101159158043983],
        "rec_hi": [0.0004101159158043983, 0.00034014926631480987, -0.005071649198531799, -0.0011404297952173285, 0.02300546135349751, -0.0008687521096892581, -0.03384235466357522, -0.0670899078083818, 0.08787871151197514, 0.34021601302346216, -0.7669548365606096, 0.5137098733480263, 0.015019238839137859, -0.12155210554854895, -0.026240365058448987, 0.04968612664694288, -0.0005956827837425191, -0.007056764062587304, -0.0007154205420543397, 0.0008625782262259724],
        "offsets": (0, 0, 0),
    },
    "sym11": {
        "orthogonal": True,
        "dec_lo": [0.00013887718657188376, -0.00017546094584372968, -0.0016696173319946611, 0.0018010896927056514, 0.008709770719732784, -0.009140435782169434, -0.026418638246881582, 0.02814882477537615, 0.03595529973403713, -0.10574469945433015, -0.017005487753640736, 0.5010675488454238, 0.7665230477033109, 0.3577701168341381, -0.08916610271150285, -0.0931755926688397, 0.035263653806012166, 0.031753354999600504, -0.005988363304927519, -0.005802940653980816, 0.0007643413858299387, 0.0006049755444670652],
        "dec_hi": [0.0006049755444670652, -0.0007643413858299387, -0.005802940653980816, 0.005988363304927519, 0.031753354999600504, -0.035263653806012166, -0.0931755926688397, 0.08916610271150285, 0.3577701168341381, -0.7665230477033109, 0.5010675488454238, 0.017005487753640736, -0.10574469945433015, -0.03595529973403713, 0.02814882477537615, 0.026418638246881582, -0.009140435782169434, -0.008709770719732784, 0.0018010896927056514, 0.0016696173319946611, -0.00017546094584372968, -0.00013887718657188376],
        "rec_lo": [0.0006049755444670652, 0.0007643413858299387, -0.005802940653980816, -0.005988363304927519, 0.031753354999600504, 0.035263653806012166, -0.0931755926688397, -0.08916610271150285, 0.3577701168341381, 0.7665230477033109, 0.5010675488454238, -0.017005487753640736, -0.10574469945433015, 0.03595529973403713, 0.02814882477537615, -0.026418638246881582, -0.009140435782169434, 0.008709770719732784, 0.0018010896927056514, -0.0016696173319946611, -0.00017546094584372968, 0.00013887718657188376],
        "rec_hi": [-0.00013887718657188376, -0.00017546094584372968, 0.0016696173319946611, 0.0018010896927056514, -0.008709770719732784, -0.009140435782169434, 0.026418638246881582, 0.02814882477537615, -0.03595529973403713, -0.10574469945433015, 0.017005487753640736, 0.5010675488454238, -0.7665230477033109, 0.3577701168341381, 0.08916610271150285, -0.0931755926688397, -0.035263653806012166, 0.031753354999600504, 0.005988363304927519, -0.005802940653980816, -0.0007643413858299387, 0.0006049755444670652],
        "offsets": (0, 0, 0),
    },
    "sym12": {
        "orthogonal": True,
        "dec_lo": [9.767610247723154e-05, -8.418262000974747e-05, -0.001386550262370246, 0.0006610376737514791, 0.00863423079172048, -0.0005948327807239624, -0.025493025089340912, 0.0018619254598864197, 0.030686743515091555, -0.08017578174217259, -0.08927100096836146, 0.34345150160951965, 0.7608721850415805, 0.5166743899411825, -0.007517992473075242, -0.12359121292129573, 0.031256859883591684, 0.06005859623424475, -0.001287033317152989, -0.013053840998593582, 0.0006915974586788278, 0.002104447335629671, -0.00017690949629193344, -0.00020526600487137938],
        "dec_hi": [-0.00020526600487137938, 0.00017690949629193344, 0.002104447335629671, -0.0006915974586788278, -0.013053840998593582, 0.001287033317152989, 0.06005859623424475, -0.031256859883591684, -0.12359121292129573, 0.007517992473075242, 0.5166743899411825, -0.7608721850415805, 0.34345150160951965, 0.08927100096836146, -0.08017578174217259, -0.030686743515091555, 0.0018619254598864197, 0.025493025089340912, -0.0005948327807239624, -0.00863423079172048, 0.0006610376737514791, 0.001386550262370246, -8.418262000974747e-05, -9.767610247723154e-05],
        "rec_lo": [-0.00020526600487137938, -0.00017690949629193344, 0.002104447335629671, 0.0006915974586788278, -0.013053840998593582, -0.001287033317152989, 0.06005859623424475, 0.031256859883591684, -0.12359121292129573, -0.007517992473075242, 0.5166743899411825, 0.7608721850415805, 0.34345150160951965, -0.08927100096836146, -0.08017578174217259, 0.030686743515091555, 0.0018619254598864197, -0.025493025089340912, -0.0005948327807239624, 0.00863423079172048, 0.0006610376737514791, -0.001386550262370246, -8.418262000974747e-05, 9.767610247723154e-05],
        "rec_hi": [-9.767610247723154e-05, -8.418262000974747e-05, 0.001386550262370246, 0.0006610376737514791, -0.00863423079172048, -0.0005948327807239624, 0.025493025089340912, 0.0018619254598864197, -0.030686743515091555, -0.08017578174217259, 0.08927100096836146, 0.34345150160951965, -0.7608721850415805, 0.5166743899411825, 0.007517992473075242, -0.12359121292129573, -0.031256859883591684, 0.06005859623424475, 0.001287033317152989, -0.013053840998593582, -0.0006915974586788278, 0.002104447335629671, 0.00017690949629193344, -0.00020526600487137938],
        "offsets": (0, 0, 0),
    },
    "sym13": {
        "orthogonal": True,
        "dec_lo": [1.6256854410114414e-05, -4.032462583487419e-05, -0.00020927052184911132, 0.0005005888490793591, 0.0011189299594958127, -0.0029509195658632297, -0.0026090150507430236, 0.012678153885499702, 0.0020104411254917684, -0.04173252720482314, -0.005227397907018556, 0.07026602620667903, -0.03530969737275998, -0.11301635631254336, 0.2665744902142178, 0.7337430388280519, 0.5840720021474913, 0.058983828462383925, -0.14698184701954173, -0.026861380252788856, 0.04855489558823431, 0.017648858035805855, -0.005635931379186695, -0.0024076833145863625, 0.0007329245483054915, 0.0002954781954875991],
        "dec_hi": [0.0002954781954875991, -0.0007329245483054915, -0.0024076833145863625, 0.005635931379186695, 0.017648858035805855, -0.04855489558823431, -0.026861380252788856, 0.14698184701954173, 0.058983828462383925, -0.5840720021474913, 0.7337430388280519, -0.2665744902142178, -0.11301635631254336, 0.03530969737275998, 0.07026602620667903, 0.005227397907018556, -0.04173252720482314, -0.0020104411254917684, 0.012678153885499702, 0.0026090150507430236, -0.0029509195658632297, -0.0011189299594958127, 0.0005005888490793591, 0.00020927052184911132, -4.032462583487419e-05, -1.6256854410114414e-05],
        "rec_lo": [0.0002954781954875991, 0.0007329245483054915, -0.0024076833145863625, -0.005635931379186695, 0.017648858035805855, 0.04855489558823431, -0.026861380252788856, -0.14698184701954173, 0.058983828462383925, 0.5840720021474913, 0.7337430388280519, 0.2665744902142178, -0.11301635631254336, -0.03530969737275998, 0.07026602620667903, -0.005227397907018556, -0.04173252720482314, 0.0020104411254917684, 0.012678153885499702, -0.0026090150507430236, -0.0029509195658632297, 0.0011189299594958127, 0.0005005888490793591, -0.00020927052184911132, -4.032462583487419e-05, 1.6256854410114414e-05],
        "rec_hi": [-1.6256854410114414e-05, -4.032462583487419e-05, 0.00020927052184911132, 0.0005005888490793591, -0.0011189299594958127, -0.0029509195658632297, 0.0026090150507430236, 0.012678153885499702, -0.0020104411254917684, -0.04173252720482314, 0.005227397907018556, 0.07026602620667903, 0.03530969737275998, -0.11301635631254336, -0.2665744902142178, 0.7337430388280519, -0.5840720021474913, 0.058983828462383925, 0.14698184701954173, -0.026861380252788856, -0.04855489558823431, 0.017648858035805855, 0.005635931379186695, -0.0024076833145863625, -0.0007329245483054915, 0.0002954781954875991],
        "offsets": (0, 0, 0),
    },
    "sym14": {
        "orthogonal": True,
        "dec_lo": [-2.3630560035158373e-05, 1.946123955648847e-05, 0.00037467186621825617, -0.00022737470733015942, -0.002783535422955635, 0.0007970566239164852, 0.011729309261388722, -0.0001330835589800499, -0.02622180812101198, 0.005838521955027694, 0.0292341274083238, -0.08843910772317169, -0.08733774970681711, 0.3483543508884237, 0.7565322361167204, 0.5167105352637036, -0.004216040297268032, -0.12692108492556942, 0.033339229883137034, 0.06709867559977023, -0.0039053310774013724, -0.019351534256228764, 0.0006852905596424015, 0.003928482068575019, -0.0003402317924311618, -0.0006169819105608121, 4.024306903743931e-05, 4.886462941519962e-05],
        "dec_hi": [4.886462941519962e-05, -4.024306903743931e-05, -0.0006169819105608121, 0.0003402317924311618, 0.003928482068575019, -0.0006852905596424015, -0.019351534256228764, 0.0039053310774013724, 0.06709867559977023, -0.033339229883137034, -0.12692108492556942, 0.004216040297268032, 0.5167105352637036, -0.7565322361167204, 0.3483543508884237, 0.08733774970681711, -0.08843910772317169, -0.0292341274083238, 0.005838521955027694, 0.02622180812101198, -0.0001330835589800499, -0.011729309261388722, 0.0007970566239164852, 0.002783535422955635, -0.00022737470733015942, -0.00037467186621825617, 1.946123955648847e-05, 2.3630560035158373e-05],
        "rec_lo": [4.886462941519962e-05, 4.024306903743931e-05, -0.0006169819105608121, -0.0003402317924311618, 0.003928482068575019, 0.0006852905596424015, -0.019351534256228764, -0.0039053310774013724, 0.06709867559977023, 0.033339229883137034, -0.12692108492556942, -0.004216040297268032, 0.5167105352637036, 0.7565322361167204, 0.3483543508884237, -0.08733774970681711, -0.08843910772317169, 0.0292341274083238, 0.005838521955027694, -0.02622180812101198, -0.0001330835589800499, 0.011729309261388722, 0.0007970566239164852, -0.002783535422955635, -0.00022737470733015942, 0.00037467186621825617, 1.946123955648847e-05, -2.3630560035158373e-05],
        "rec_hi": [2.3630560035158373e-05, 1.946123955648847e-05, -0.00037467186621825617, -0.00022737470733015942, 0.002783535422955635, 0.0007970566239164852, -0.011729309261388722, -0.0001330835589800499, 0.02622180812101198, 0.005838521955027694, -0.0292341274083238, -0.08843910772317169, 0.08733774970681711, 0.3483543508884237, -0.7565322361167204, 0.5167105352637036, 0.004216040297268032, -0.12692108492556942, -0.033339229883137034, 0.06709867559977023, 0.0039053310774013724, -0.019351534256228764, -0.0006852905596424015, 0.003928482068575019, 0.0003402317924311618, -0.0006169819105608121, -4.024306903743931e-05, 4.886462941519962e-05],
        "offsets": (0, 0, 0),
    },
    "sym15": {
        "orthogonal": True,
        "dec_lo": [7.861563097422099e-06, -1.247441566171495e-05, -0.00013402754064691138, 0.0001645776926645428, 0.0010221150617408456, -0.0010189824888352061, -0.004537305109916229, 0.004445018799235956, 0.013999484315485316, -0.013654628949071792, -0.030663892215053046, 0.027066703642695242, 0.014186260688023247, -0.13208472033108243, -0.02187935270805506, 0.493035815111093, 0.7590602994219431, 0.3760587133792271, -0.07319576844386885, -0.0876985552341979, 0.05664991638480803, 0.05048205767365774, -0.010602353795675113, -0.012517854442464955, 0.0035714766608606354, 0.0032157974822626476, -0.0004341176281823475, -0.00041009506433781076, 5.618453198651494e-05, 3.5408331363105626e-05],
        "dec_hi": [3.5408331363105626e-05, -5.618453198651494e-05, -0.00041009506433781076, 0.0004341176281823475, 0.0032157974822626476, -0.0035714766608606354, -0.012517854442464955, 0.010602353795675113, 0.05048205767365774, -0.05664991638480803, -0.0876985552341979, 0.07319576844386885, 0.3760587133792271, -0.7590602994219431, 0.493035815111093, 0.02187935270805506, -0.13208472033108243, -0.014186260688023247, 0.027066703642695242, 0.030663892215053046, -0.013654628949071792, -0.013999484315485316, 0.004445018799235956, 0.004537305109916229, -0.0010189824888352061, -0.0010221150617408456, 0.0001645776926645428, 0.00013402754064691138, -1.247441566171495e-05, -7.861563097422099e-06],
        "rec_lo": [3.5408331363105626e-05, 5.618453198651494e-05, -0.00041009506433781076, -0.0004341176281823475, 0.0032157974822626476, 0.0035714766608606354, -0.012517854442464955, -0.010602353795675113, 0.05048205767365774, 0.05664991638480803, -0.0876985552341979, -0.07319576844386885, 0.3760587133792271, 0.7590602994219431, 0.493035815111093, -0.02187935270805506, -0.13208472033108243, 0.014186260688023247, 0.027066703642695242, -0.030663892215053046, -0.013654628949071792, 0.013999484315485316, 0.004445018799235956, -0.004537305109916229, -0.0010189824888352061, 0.0010221150617408456, 0.0001645776926645428, -0.00013402754064691138, -1.247441566171495e-05, 7.861563097422099e-06],
        "rec_hi": [-7.861563097422099e-06, -1.247441566171495e-05, 0.00013402754064691138, 0.0001645776926645428, -0.0010221150617408456, -0.0010189824888352061, 0.004537305109916229, 0.004445018799235956, -0.013999484315485316, -0.013654628949071792, 0.030663892215053046, 0.027066703642695242, -0.014186260688023247, -0.13208472033108243, 0.02187935270805506, 0.493035815111093, -0.7590602994219431, 0.3760587133792271, 0.07319576844386885, -0.0876985552341979, -0.05664991638480803, 0.05048205767365774, 0.010602353795675113, -0.012517854442464955, -0.0035714766608606354, 0.0032157974822626476, 0.0004341176281823475, -0.00041009506433781076, -5.618453198651494e-05, 3.5408331363105626e-05],
        "offsets": (0, 0, 0),
    },
    "sym16": {
        "orthogonal": True,
        "dec_lo": [-2.7031723961574194e-06, 5.435866822392437e-06, 4.409773896356807e-05, -9.075574077493127e-05, -0.0003428905100385175, 0.0006981233313770532, 0.0016544689065060832, -0.003333238873398262, -0.005449273998107065, 0.011195417510109423, 0.012766758253025286, -0.027344240407559332, -0.01635633360087952, 0.05829728244128703, -0.011154273612198876, -0.1556312111138001, 0.08221197735161943, 0.616775904530487, 0.7113951510631492, 0.24200704402514653, -0.10932173814447667, -0.05442474740446879, 0.055710956634586896, 0.02596340814931507, -0.017345719766511832, -0.008654614801834605, 0.0039049995940054006, 0.0019361521588140687, -0.0006587395993233103, -0.00031806461542141837, 5.004404862357365e-05, 2.4886130446379385e-05],
        "dec_hi": [2.4886130446379385e-05, -5.004404862357365e-05, -0.00031806461542141837, 0.0006587395993233103, 0.0019361521588140687, -0.0039049995940054006, -0.008654614801834605, 0.017345719766511832, 0.02596340814931507, -0.055710956634586896, -0.05442474740446879, 0.10932173814447667, 0.24200704402514653, -0.7113951510631492, 0.616775904530487, -0.08221197735161943, -0.1556312111138001, 0.011154273612198876, 0.05829728244128703, 0.01635633360087952, -0.027344240407559332, -0.012766758253025286, 0.011195417510109423, 0.005449273998107065, -0.003333238873398262, -0.0016544689065060832, 0.0006981233313770532, 0.0003428905100385175, -9.075574077493127e-05, -4.409773896356807e-05, 5.435866822392437e-06, 2.7031723961574194e-06],
        "rec_lo": [2.4886130446379385e-05, 5.004404862357365e-05, -0.00031806461542141837, -0.0006587395993233103, 0.0019361521588140687, 0.0039049995940054006, -0.008654614801834605, -0.017345719766511832, 0.02596340814931507, 0.055710956634586896, -0.05442474740446879, -0.10932173814447667, 0.24200704402514653, 0.7113951510631492, 0.616775904530487, 0.08221197735161943, -0.1556312111138001, -0.011154273612198876, 0.05829728244128703, -0.01635633360087952, -0.027344240407559332, 0.012766758253025286, 0.011195417510109423, -0.005449273998107065, -0.003333238873398262, 0.0016544689065060832, 0.0006981233313770532, -0.0003428905100385175, -9.075574077493127e-05, 4.409773896356807e-05, 5.435866822392437e-06, -2.7031723961574194e-06],
        "rec_hi": [2.7031723961574194e-06, 5.435866822392437e-06, -4.409773896356807e-05, -9.075574077493127e-05, 0.0003428905100385175, 0.0006981233313770532, -0.0016544689065060832, -0.003333238873398262, 0.005449273998107065, 0.011195417510109423, -0.012766758253025286, -0.027344240407559332, 0.01635633360087952, 0.05829728244128703, 0.011154273612198876, -0.1556312111138001, -0.08221197735161943, 0.616775904530487, -0.7113951510631492, 0.24200704402514653, 0.10932173814447667, -0.05442474740446879, -0.055710956634586896, 0.02596340814931507, 0.017345719766511832, -0.008654614801834605, -0.0039049995940054006, 0.0019361521588140687, 0.0006587395993233103, -0.00031806461542141837, -5.004404862357365e-05, 2.4886130446379385e-05],
        "offsets": (0, 0, 0),
    },
    "sym17": {
        "orthogonal": True,
        "dec_lo": [9.157158362786623e-07, -2.7727676445557225e-06, -1.6262479909399795e-05, 4.6331365860318936e-05, 0.00013687809352246503, -0.000344852670041805, -0.00066169693886336, 0.0015773390142569353, 0.0016998372328427948, -0.005848612817432981, -0.0016874706295690997, 0.02031867623932932, 0.0029737711192242226, -0.04764250684908654, -0.013019440597437362, 0.04301846957413779, -0.07509882878072426, -0.13468533364874713, 0.25293904015017804, 0.7208633603019794, 0.5969185995884732, 0.08556278189410757, -0.12866557122068, 0.0007003666034218738, 0.08178012121310792, 0.02712875365113428, -0.013733370538583641, -0.005003851596753041, 0.00387164530016811, 0.0015467535742962472, -0.00038525950108567403, -0.00014591257356592272, 5.3873460047303574e-05, 1.779189129579815e-05],
        "dec_hi": [1.779189129579815e-05, -5.3873460047303574e-05, -0.00014591257356592272, 0.00038525950108567403, 0.0015467535742962472, -0.00387164530016811, -0.005003851596753041, 0.013733370538583641, 0.02712875365113428, -0.08178012121310792, 0.0007003666034218738, 0.12866557122068, 0.08556278189410757, -0.5969185995884732, 0.7208633603019794, -0.25293904015017804, -0.13468533364874713, 0.07509882878072426, 0.04301846957413779, 0.013019440597437362, -0.04764250684908654, -0.0029737711192242226, 0.02031867623932932, 0.0016874706295690997, -0.005848612817432981, -0.0016998372328427948, 0.0015773390142569353, 0.00066169693886336, -0.000344852670041805, -0.00013687809352246503, 4.6331365860318936e-05, 1.6262479909399795e-05, -2.7727676445557225e-06, -9.157158362786623e-07],
        "rec_lo": [1.779189129579815e-05, 5.3873460047303574e-05, -0.00014591257356592272, -0.00038525950108567403, 0.0015467535742962472, 0.00387164530016811, -0.005003851596753041, -0.013733370538583641, 0.02712875365113428, 0.08178012121310792, 0.0007003666034218738, -0.12866557122068, 0.08556278189410757, 0.5969185995884732, 0.7208633603019794, 0.25293904015017804, -0.13468533364874713, -0.07509882878072426, 0.04301846957413779, -0.013019440597437362, -0.04764250684908654, 0.0029737711192242226, 0.02031867623932932, -0.0016874706295690997, -0.005848612817432981, 0.0016998372328427948, 0.0015773390142569353, -0.00066169693886336, -0.000344852670041805, 0.00013687809352246503, 4.6331365860318936e-05, -1.6262479909399795e-05, -2.7727676445557225e-06, 9.157158362786623e-07],
        "rec_hi": [-9.157158362786623e-07, -2.7727676445557225e-06, 1.6262479909399795e-05, 4.6331365860318936e-05, -0.00013687809352246503, -0.000344852670041805, 0.00066169693886336, 0.0015773390142569353, -0.0016998372328427948, -0.005848612817432981, 0.0016874706295690997, 0.02031867623932932, -0.0029737711192242226, -0.04764250684908654, 0.013019440597437362, 0.04301846957413779, 0.07509882878072426, -0.13468533364874713, -0.25293904015017804, 0.7208633603019794, -0.5969185995884732, 0.08556278189410757, 0.12866557122068, 0.0007003666034218738, -0.08178012121310792, 0.02712875365113428, 0.013733370538583641, -0.005003851596753041, -0.00387164530016811, 0.0015467535742962472, 0.00038525950108567403, -0.00014591257356592272, -5.3873460047303574e-05, 1.779189129579815e-05],
        "offsets": (0, 0, 0),
    },
    "sym18": {
        "orthogonal": True,
        "dec_lo": [6.847857865470607e-07, -1.2608383702474024e-06, -1.2412998618368376e-05, 2.391294638351989e-05, 0.00010805757812150247, -0.00021097175935084786, -0.0005947266367158051, 0.0011562536744791046, 0.0022842700813490496, -0.004466794426353487, -0.006433011727522408, 0.012948619013008353, 0.013334513325393127, -0.028599633930839776, -0.014259655331260092, 0.05980430369432843, -0.011008530304479172, -0.14355140332421767, 0.10226183142756706, 0.6241136213072419, 0.7048523607631126, 0.2297433337725436, -0.12527645854546857, -0.0633695003518183, 0.05926374361925724, 0.028270981624499623, -0.02218928491803132, -0.011249441952450555, 0.0058707442520093585, 0.003051716822042862, -0.0012594976637293628, -0.0006412660275794476, 0.00017478285687384524, 9.008396397461617e-05, -1.0629377097786388e-05, -5.77302097411955e-06],
        "dec_hi": [-5.77302097411955e-06, 1.0629377097786388e-05, 9.008396397461617e-05, -0.00017478285687384524, -0.0006412660275794476, 0.0012594976637293628, 0.003051716822042862, -0.0058707442520093585, -0.011249441952450555, 0.02218928491803132, 0.028270981624499623, -0.05926374361925724, -0.0633695003518183, 0.12527645854546857, 0.2297433337725436, -0.7048523607631126, 0.6241136213072419, -0.10226183142756706, -0.14355140332421767, 0.011008530304479172, 0.05980430369432843, 0.014259655331260092, -0.028599633930839776, -0.013334513325393127, 0.012948619013008353, 0.006433011727522408, -0.004466794426353487, -0.0022842700813490496, 0.0011562536744791046, 0.0005947266367158051, -0.00021097175935084786, -0.00010805757812150247, 2.391294638351989e-05, 1.2412998618368376e-05, -1.2608383702474024e-06, -6.847857865470607e-07],
        "rec_lo": [-5.77302097411955e-06, -1.0629377097786388e-05, 9.008396397461617e-05, 0.00017478285687384524, -0.0006412660275794476, -0.0012594976637293628, 0.003051716822042862, 0.0058707442520093585, -0.011249441952450555, -0.02218928491803132, 0.028270981624499623, 0.05926374361925724, -0.0633695003518183, -0.12527645854546857, 0.2297433337725436, 0.7048523607631126, 0.6241136213072419, 0.10226183142756706, -0.14355140332421767, -0.011008530304479172, 0.05980430369432843, -0.014259655331260092, -0.028599633930839776, 0.013334513325393127, 0.012948619013008353, -0.006433011727522408, -0.004466794426353487, 0.0022842700813490496, 0.0011562536744791046, -0.0005947266367158051, -0.00021097175935084786, 0.00010805757812150247, 2.391294638351989e-05, -1.2412998618368376e-05, -1.2608383702474024e-06, 6.847857865470607e-07],
        "rec_hi": [-6.847857865470607e-07, -1.2608383702474024e-06, 1.2412998618368376e-05, 2.391294638351989e-05, -0.00010805757812150247, -0.00021097175935084786, 0.0005947266367158051, 0.0011562536744791046, -0.0022842700813490496, -0.004466794426353487, 0.006433011727522408, 0.012948619013008353, -0.013334513325393127, -0.028599633930839776, 0.014259655331260092, 0.05980430369432843, 0.011008530304479172, -0.14355140332421767, -0.10226183142756706, 0.6241136213072419, -0.7048523607631126, 0.2297433337725436, 0.12527645854546857, -0.0633695003518183, -0.05926374361925724, 0.028270981624499623, 0.02218928491803132, -0.011249441952450555, -0.0058707442520093585, 0.003051716822042862, 0.0012594976637293628, -0.0006412660275794476, -0.00017478285687384524, 9.008396397461617e-05, 1.0629377097786388e-05, -5.77302097411955e-06],
        "offsets": (0, 0, 0),
    },
    "sym19": {
        "orthogonal": True,
        "dec_lo": [4.938612414596931e-07, -5.182050653453317e-07, -9.24792902034771e-06, 1.236845212970402e-05, 8.95847648294252e-05, -0.00011653128332302106, -0.0005530591840920159, 0.0006733459647868663, 0.002494976745421074, -0.0024058449462858395, -0.007921738538443893, 0.00639247125364494, 0.018382864335116753, -0.011668362493638807, -0.019018399493396617, 0.04749367971679956, 0.0235342137498116, -0.12688295659390186, -0.00937874838459332, 0.49537200703456646, 0.7535819473450875, 0.37935531421253565, -0.07798899398784172, -0.10682715267500395, 0.04571417477111841, 0.04433404542341444, -0.025917812161499246, -0.023838056235186734, 0.005200482621719818, 0.006358025138037752, -0.0014590161091627256, -0.0014032251079928223, 0.0004028909774523232, 0.00029375210671291285, -4.9873724498685154e-05, -3.752619774035637e-05, 2.04152729769768e-06, 1.9456220580224237e-06],
        "dec_hi": [1.9456220580224237e-06, -2.04152729769768e-06, -3.752619774035637e-05, 4.9873724498685154e-05, 0.00029375210671291285, -0.0004028909774523232, -0.0014032251079928223, 0.0014590161091627256, 0.006358025138037752, -0.005200482621719818, -0.023838056235186734, 0.025917812161499246, 0.04433404542341444, -0.04571417477111841, -0.10682715267500395, 0.07798899398784172, 0.37935531421253565, -0.7535819473450875, 0.49537200703456646, 0.00937874838459332, -0.12688295659390186, -0.0235342137498116, 0.04749367971679956, 0.019018399493396617, -0.011668362493638807, -0.018382864335116753, 0.00639247125364494, 0.007921738538443893, -0.0024058449462858395, -0.002494976745421074, 0.0006733459647868663, 0.0005530591840920159, -0.00011653128332302106, -8.95847648294252e-05, 1.236845212970402e-05, 9.24792902034771e-06, -5.182050653453317e-07, -4.938612414596931e-07],
        "rec_lo": [1.9456220580224237e-06, 2.04152729769768e-06, -3.752619774035637e-05, -4.9873724498685154e-05, 0.00029375210671291285, 0.0004028909774523232, -0.0014032251079928223, -0.0014590161091627256, 0.006358025138037752, 0.005200482621719818, -0.023838056235186734, -0.025917812161499246, 0.04433404542341444, 0.04571417477111841, -0.10682715267500395, -0.07798899398784172, 0.37935531421253565, 0.7535819473450875, 0.49537200703456646, -0.00937874838459332, -0.12688295659390186, 0.0235342137498116, 0.04749367971679956, -0.019018399493396617, -0.011668362493638807, 0.018382864335116753, 0.00639247125364494, -0.007921738538443893, -0.0024058449462858395, 0.002494976745421074, 0.0006733459647868663, -0.0005530591840920159, -0.00011653128332302106, 8.95847648294252e-05, 1.236845212970402e-05, -9.24792902034771e-06, -5.182050653453317e-07, 4.938612414596931e-07],
        "rec_hi": [-4.938612414596931e-07, -5.182050653453317e-07, 9.24792902034771e-06, 1.236845212970402e-05, -8.95847648294252e-05, -0.00011653128332302106, 0.0005530591840920159, 0.0006733459647868663, -0.002494976745421074, -0.0024058449462858395, 0.007921738538443893, 0.00639247125364494, -0.018382864335116753, -0.011668362493638807, 0.019018399493396617, 0.04749367971679956, -0.0235342137498116, -0.12688295659390186, 0.00937874838459332, 0.49537200703456646, -0.7535819473450875, 0.37935531421253565, 0.07798899398784172, -0.10682715267500395, -0.04571417477111841, 0.04433404542341444, 0.025917812161499246, -0.023838056235186734, -0.005200482621719818, 0.006358025138037752, 0.0014590161091627256, -0.0014032251079928223, -0.0004028909774523232, 0.00029375210671291285, 4.9873724498685154e-05, -3.752619774035637e-05, -2.04152729769768e-06, 1.9456220580224237e-06],
        "offsets": (0, 0, 0),
    },
    "sym20": {
        "orthogonal": True,
        "dec_lo": [-1.6885433633248292e-07, 3.131295312743972e-07, 3.4362965637348256e-06, -6.424395944624323e-06, -3.321174923209228e-05, 6.333811240497165e-05, 0.00020507590449478716, -0.0003909540158470716, -0.0008978793050406898, 0.0017010019786609686, 0.002917819584541607, -0.00564049490568102, -0.007364905266412118, 0.014380388810313676, 0.013399364866696833, -0.030227705448421273, -0.013582580706789903, 0.05827840091000209, -0.016398623329059725, -0.14192242000110036, 0.1100093543879213, 0.6254442770017576, 0.7017042289078668, 0.22762800158820257, -0.12931488606514216, -0.06451576664334994, 0.06555006872289021, 0.032012682469243714, -0.025583440024953993, -0.013135967590303388, 0.008155850463329757, 0.004315365293430331, -0.0020081348463221716, -0.0010567081071532587, 0.00038775694709199435, 0.00020205725067381163, -4.4913493500076025e-05, -2.3989439858018047e-05, 2.56874593978856e-06, 1.3851899854493926e-06],
        "dec_hi": [1.3851899854493926e-06, -2.56874593978856e-06, -2.3989439858018047e-05, 4.4913493500076025e-05, 0.00020205725067381163, -0.00038775694709199435, -0.0010567081071532587, 0.0020081348463221716, 0.004315365293430331, -0.008155850463329757, -0.013135967590303388, 0.025583440024953993, 0.032012682469243714, -0.06555006872289021, -0.06451576664334994, 0.12931488606514216, 0.22762800158820257, -0.7017042289078668, 0.6254442770017576, -0.1100093543879213, -0.14192242000110036, 0.016398623329059725, 0.05827840091000209, 0.013582580706789903, -0.030227705448421273, -0.013399364866696833, 0.014380388810313676, 0.007364905266412118, -0.00564049490568102, -0.002917819584541607, 0.0017010019786609686, 0.0008978793050406898, -0.0003909540158470716, -0.00020507590449478716, 6.333811240497165e-05, 3.321174923209228e-05, -6.424395944624323e-06, -3.4362965637348256e-06, 3.131295312743972e-07, 1.6885433633248292e-07],
        "rec_lo": [1.3851899854493926e-06, 2.56874593978856e-06, -2.3989439858018047e-05, -4.4913493500076025e-05, 0.00020205725067381163, 0.00038775694709199435, -0.0010567081071532587, -0.0020081348463221716, 0.004315365293430331, 0.008155850463329757, -0.013135967590303388, -0.025583440024953993, 0.032012682469243714, 0.06555006872289021, -0.06451576664334994, -0.12931488606514216, 0.22762800158820257, 0.7017042289078668, 0.6254442770017576, 0.1100093543879213, -0.14192242000110036, -0.016398623329059725, 0.05827840091000209, -0.013582580706789903, -0.030227705448421273, 0.013399364866696833, 0.014380388810313676, -0.007364905266412118, -0.00564049490568102, 0.002917819584541607, 0.0017010019786609686, -0.0008978793050406898, -0.0003909540158470716, 0.00020507590449478716, 6.333811240497165e-05, -3.321174923209228e-05, -6.424395944624323e-06, 3.4362965637348256e-06, 3.131295312743972e-07, -1.6885433633248292e-07],
        "rec_hi": [1.6885433633248292e-07, 3.131295312743972e-07, -3.4362965637348256e-06, -6.424395944624323e-06, 3.321174923209228e-05, 6.333811240497165e-05, -0.00020507590449478716, -0.0003909540158470716, 0.0008978793050406898, 0.0017010019786609686, -0.002917819584541607, -0.00564049490568102, 0.007364905266412118, 0.014380388810313676, -0.013399364866696833, -0.030227705448421273, 0.013582580706789903, 0.05827840091000209, 0.016398623329059725, -0.14192242000110036, -0.1100093543879213, 0.6254442770017576, -0.7017042289078668, 0.22762800158820257, 0.12931488606514216, -0.06451576664334994, -0.06555006872289021, 0.032012682469243714, 0.025583440024953993, -0.013135967590303388, -0.008155850463329757, 0.004315365293430331, 0.0020081348463221716, -0.0010567081071532587, -0.00038775694709199435, 0.00020205725067381163, 4.4913493500076025e-05, -2.3989439858018047e-05, -2.56874593978856e-06, 1.3851899854493926e-06],
        "offsets": (0, 0, 0),
    },
    "sym21": {
        "orthogonal": True,
        "dec_lo": [5.82187691035014e-08, -1.4320510545690373e-07, -1.1881538560227712e-06, 3.0857939440735616e-06, 1.144458020771387e-05, -3.1710159628927054e-05, -6.82652119464762e-05, 0.0002095223904874821, 0.0002837542144299027, -0.0009984049411428126, -0.0008895561213717556, 0.00359135101613976, 0.0021771187480210175, -0.009876944411795192, -0.003474554895544056, 0.022114302387634246, 0.0014535803989971692, -0.042669818586828306, 0.010077729976789677, 0.06895358224300459, -0.060165507323557764, -0.13033085390277596, 0.2420508608708407, 0.7095862923025904, 0.611164089742696, 0.1035294289227103, -0.1415809473188474, -0.026867308004412255, 0.06395882497571098, 0.013559222929273676, -0.024558368511753824, -0.005256915567388685, 0.008544432999123762, 0.002164814979868325, -0.0022096307162093993, -0.0006890423276887656, 0.0003733320700052109, 0.0001316386955391847, -4.28361443448303e-05, -1.6298639493624554e-05, 2.4087883878614342e-06, 9.792716155242327e-07],
        "dec_hi": [9.792716155242327e-07, -2.4087883878614342e-06, -1.6298639493624554e-05, 4.28361443448303e-05, 0.0001316386955391847, -0.0003733320700052109, -0.0006890423276887656, 0.0022096307162093993, 0.002164814979868325, -0.008544432999123762, -0.005256915567388685, 0.024558368511753824, 0.013559222929273676, -0.06395882497571098, -0.026867308004412255, 0.1415809473188474, 0.1035294289227103, -0.611164089742696, 0.7095862923025904, -0.2420508608708407, -0.13033085390277596, 0.060165507323557764, 0.06895358224300459, -0.010077729976789677, -0.042669818586828306, -0.0014535803989971692, 0.022114302387634246, 0.003474554895544056, -0.009876944411795192, -0.0021771187480210175, 0.00359135101613976, 0.0008895561213717556, -0.0009984049411428126, -0.0002837542144299027, 0.0002095223904874821, 6.82652119464762e-05, -3.1710159628927054e-05, -1.144458020771387e-05, 3.0857939440735616e-06, 1.1881538560227712e-06, -1.4320510545690373e-07, -5.82187691035014e-08],
        "rec_lo": [9.792716155242327e-07, 2.4087883878614342e-06, -1.6298639493624554e-05, -4.28361443448303e-05, 0.0001316386955391847, 0.0003733320700052109, -0.0006890423276887656, -0.0022096307162093993, 0.002164814979868325, 0.008544432999123762, -0.005256915567388685, -0.024558368511753824, 0.013559222929273676, 0.06395882497571098, -0.026867308004412255, -0.1415809473188474, 0.1035294289227103, 0.611164089742696, 0.7095862923025904, 0.2420508608708407, -0.13033085390277596, -0.060165507323557764, 0.06895358224300459, 0.010077729976789677, -0.042669818586828306, 0.0014535803989971692, 0.022114302387634246, -0.003474554895544056, -0.009876944411795192, 0.0021771187480210175, 0.00359135101613976, -0.0008895561213717556, -0.0009984049411428126, 0.0002837542144299027, 0.0002095223904874821, -6.82652119464762e-05, -3.1710159628927054e-05, 1.144458020771387e-05, 3.0857939440735616e-06, -1.1881538560227712e-06, -1.4320510545690373e-07, 5.82187691035014e-08],
        "rec_hi": [-5.82187691035014e-08, -1.4320510545690373e-07, 1.1881538560227712e-06, 3.0857939440735616e-06, -1.144458020771387e-05, -3.1710159628927054e-05, 6.82652119464762e-05, 0.0002095223904874821, -0.0002837542144299027, -0.0009984049411428126, 0.0008895561213717556, 0.00359135101613976, -0.0021771187480210175, -0.009876944411795192, 0.003474554895544056, 0.022114302387634246, -0.0014535803989971692, -0.042669818586828306, -0.010077729976789677, 0.06895358224300459, 0.060165507323557764, -0.13033085390277596, -0.2420508608708407, 0.7095862923025904, -0.611164089742696, 0.1035294289227103, 0.1415809473188474, -0.026867308004412255, -0.06395882497571098, 0.013559222929273676, 0.024558368511753824, -0.005256915567388685, -0.008544432999123762, 0.002164814979868325, 0.0022096307162093993, -0.0006890423276887656, -0.0003733320700052109, 0.0001316386955391847, 4.28361443448303e-05, -1.6298639493624554e-05, -2.4087883878614342e-06, 9.792716155242327e-07],
        "offsets": (0, 0, 0),
    },
    "sym22": {
        "orthogonal": True,
        "dec_lo": [4.175872746968514e-08, -7.520878955895315e-08, -9.238812823995308e-07, 1.7444651915554698e-06, 9.93984100512423e-06, -1.8867706713101584e-05, -6.81421130670174e-05, 0.0001291856383523585, 0.0003340664974301645, -0.0006272296492099169, -0.0012343894671407733, 0.0023173851126390022, 0.0035705150654678076, -0.00670865605276078, -0.007997233273329173, 0.01601655607040311, 0.014090234887491372, -0.03019369062190569, -0.010870008963601619, 0.058866984738412835, -0.020278214768253727, -0.1416049576861429, 0.11446519521017187, 0.6253093684740827, 0.6997640739068778, 0.2280112415358404, -0.1310618595533077, -0.06594587466275792, 0.06897594394301922, 0.03326688435252325, -0.030100981152315846, -0.015761119402412413, 0.009944411253254614, 0.005338991378921509, -0.003009740047961605, -0.0015967906592669466, 0.0006751775647645624, 0.0003588933957201328, -0.00011320742571984375, -5.9432855856275034e-05, 1.2481992187175496e-05, 6.573721462584861e-06, -6.000878699232318e-07, -3.3319118636187375e-07],
        "dec_hi": [-3.3319118636187375e-07, 6.000878699232318e-07, 6.573721462584861e-06, -1.2481992187175496e-05, -5.9432855856275034e-05, 0.00011320742571984375, 0.0003588933957201328, -0.0006751775647645624, -0.0015967906592669466, 0.003009740047961605, 0.005338991378921509, -0.009944411253254614, -0.015761119402412413, 0.030100981152315846, 0.03326688435252325, -0.06897594394301922, -0.06594587466275792, 0.1310618595533077, 0.2280112415358404, -0.6997640739068778, 0.6253093684740827, -0.11446519521017187, -0.1416049576861429, 0.020278214768253727, 0.058866984738412835, 0.010870008963601619, -0.03019369062190569, -0.014090234887491372, 0.01601655607040311, 0.007997233273329173, -0.00670865605276078, -0.0035705150654678076, 0.0023173851126390022, 0.0012343894671407733, -0.0006272296492099169, -0.0003340664974301645, 0.0001291856383523585, 6.81421130670174e-05, -1.8867706713101584e-05, -9.93984100512423e-06, 1.7444651915554698e-06, 9.238812823995308e-07, -7.520878955895315e-08, -4.175872746968514e-08],
        "rec_lo": [-3.3319118636187375e-07, -6.000878699232318e-07, 6.573721462584861e-06, 1.2481992187175496e-05, -5.9432855856275034e-05, -0.00011320742571984375, 0.0003588933957201328, 0.0006751775647645624, -0.0015967906592669466, -0.003009740047961605, 0.005338991378921509, 0.009944411253254614, -0.015761119402412413, -0.030100981152315846, 0.03326688435252325, 0.06897594394301922, -0.06594587466275792, -0.1310618595533077, 0.2280112415358404, 0.6997640739068778, 0.6253093684740827, 0.11446519521017187, -0.1416049576861429, -0.020278214768253727, 0.058866984738412835, -0.010870008963601619, -0.03019369062190569, 0.014090234887491372, 0.01601655607040311, -0.007997233273329173, -0.00670865605276078, 0.0035705150654678076, 0.0023173851126390022, -0.0012343894671407733, -0.0006272296492099169, 0.0003340664974301645, 0.0001291856383523585, -6.81421130670174e-05, -1.8867706713101584e-05, 9.93984100512423e-06, 1.7444651915554698e-06, -9.238812823995308e-07, -7.520878955895315e-08, 4.175872746968514e-08],
        "rec_hi": [-4.175872746968514e-08, -7.520878955895315e-08, 9.238812823995308e-07, 1.7444651915554698e-06, -9.93984100512423e-06, -1.8867706713101584e-05, 6.81421130670174e-05, 0.0001291856383523585, -0.0003340664974301645, -0.0006272296492099169, 0.0012343894671407733, 0.0023173851126390022, -0.0035705150654678076, -0.00670865605276078, 0.007997233273329173, 0.01601655607040311, -0.014090234887491372, -0.03019369062190569, 0.010870008963601619, 0.058866984738412835, 0.020278214768253727, -0.1416049576861429, -0.11446519521017187, 0.6253093684740827, -0.6997640739068778, 0.2280112415358404, 0.1310618595533077, -0.06594587466275792, -0.06897594394301922, 0.03326688435252325, 0.030100981152315846, -0.015761119402412413, -0.009944411253254614, 0.005338991378921509, 0.003009740047961605, -0.0015967906592669466, -0.0006751775647645624, 0.0003588933957201328, 0.00011320742571984375, -5.9432855856275034e-05, -1.2481992187175496e-05, 6.573721462584861e-06, 6.000878699232318e-07, -3.3319118636187375e-07],
        "offsets": (0, 0, 0),
    },
    "sym23": {
        "orthogonal": True,
        "dec_lo": [2.993715943446926e-08, -3.0985907689141655e-08, -6.880754512451222e-07, 8.106410054517765e-07, 7.772942605213352e-06, -9.814123308456576e-06, -5.763545546551742e-05, 7.242502105395396e-05, 0.000312118636444618, -0.00036715874850338907, -0.0013049059521372565, 0.0013303904801056892, 0.004253561307086754, -0.003559237228157082, -0.010659248788341513, 0.007251250242202439, 0.018740947076078932, -0.014714799527750752, -0.016627829110620652, 0.05233839175375692, 0.019176699629223946, -0.1292353458590276, -5.6144663733221674e-05, 0.4995504060020068, 0.7486738099382784, 0.3782852744422217, -0.08019969569956725, -0.11289335571807167, 0.048205203353401435, 0.0496330746284429, -0.03084614208480051, -0.029030092979291242, 0.009443558761881929, 0.010872663494624932, -0.0026321851009271768, -0.00305633992058497, 0.0008662227625956068, 0.0007865980545045416, -0.00022079735154774047, -0.00017322941781978556, 3.5092622082767117e-05, 2.74033136334914e-05, -3.081025224452961e-06, -2.6159282800726482e-06, 1.1752752503341032e-07, 1.1354969136814226e-07],
        "dec_hi": [1.1354969136814226e-07, -1.1752752503341032e-07, -2.6159282800726482e-06, 3.081025224452961e-06, 2.74033136334914e-05, -3.5092622082767117e-05, -0.00017322941781978556, 0.00022079735154774047, 0.0007865980545045416, -0.0008662227625956068, -0.00305633992058497, 0.0026321851009271768, 0.010872663494624932, -0.009443558761881929, -0.029030092979291242, 0.03084614208480051, 0.0496330746284429, -0.048205203353401435, -0.11289335571807167, 0.08019969569956725, 0.3782852744422217, -0.7486738099382784, 0.4995504060020068, 5.6144663733221674e-05, -0.1292353458590276, -0.019176699629223946, 0.05233839175375692, 0.016627829110620652, -0.014714799527750752, -0.018740947076078932, 0.007251250242202439, 0.010659248788341513, -0.003559237228157082, -0.004253561307086754, 0.0013303904801056892, 0.0013049059521372565, -0.00036715874850338907, -0.000312118636444618, 7.242502105395396e-05, 5.763545546551742e-05, -9.814123308456576e-06, -7.772942605213352e-06, 8.106410054517765e-07, 6.880754512451222e-07, -3.0985907689141655e-08, -2.993715943446926e-08],
        "rec_lo": [1.1354969136814226e-07, 1.1752752503341032e-07, -2.6159282800726482e-06, -3.081025224452961e-06, 2.74033136334914e-05, 3.5092622082767117e-05, -0.00017322941781978556, -0.00022079735154774047, 0.0007865980545045416, 0.0008662227625956068, -0.00305633992058497, -0.0026321851009271768, 0.010872663494624932, 0.009443558761881929, -0.029030092979291242, -0.03084614208480051, 0.0496330746284429, 0.048205203353401435, -0.11289335571807167, -0.08019969569956725, 0.3782852744422217, 0.7486738099382784, 0.4995504060020068, -5.6144663733221674e-05, -0.1292353458590276, 0.019176699629223946, 0.05233839175375692, -0.016627829110620652, -0.014714799527750752, 0.018740947076078932, 0.007251250242202439, -0.010659248788341513, -0.003559237228157082, 0.004253561307086754, 0.0013303904801056892, -0.0013049059521372565, -0.00036715874850338907, 0.000312118636444618, 7.242502105395396e-05, -5.763545546551742e-05, -9.814123308456576e-06, 7.772942605213352e-06, 8.106410054517765e-07, -6.880754512451222e-07, -3.0985907689141655e-08, 2.993715943446926e-08],
        "rec_hi": [-2.993715943446926e-08, -3.0985907689141655e-08, 6.880754512451222e-07, 8.106410054517765e-07, -7.772942605213352e-06, -9.814123308456576e-06, 5.763545546551742e-05, 7.242502105395396e-05, -0.000312118636444618, -0.00036715874850338907, 0.0013049059521372565, 0.0013303904801056892, -0.004253561307086754, -0.003559237228157082, 0.010659248788341513, 0.007251250242202439, -0.018740947076078932, -0.014714799527750752, 0.016627829110620652, 0.05233839175375692, -0.019176699629223946, -0.1292353458590276, 5.6144663733221674e-05, 0.4995504060020068, -0.7486738099382784, 0.3782852744422217, 0.08019969569956725, -0.11289335571807167, -0.048205203353401435, 0.0496330746284429, 0.03084614208480051, -0.029030092979291242, -0.009443558761881929, 0.010872663494624932, 0.0026321851009271768, -0.00305633992058497, -0.0008662227625956068, 0.0007865980545045416, 0.00022079735154774047, -0.00017322941781978556, -3.5092622082767117e-05, 2.74033136334914e-05, 3.081025224452961e-06, -2.6159282800726482e-06, -1.1752752503341032e-07, 1.1354969136814226e-07],
        "offsets": (0, 0, 0),
    },
    "sym24": {
        "orthogonal": True,
        "dec_lo": [-1.0098689021190807e-08, 1.9514912334755294e-08, 2.476812003179574e-07, -4.780561751448263e-07, -2.919914157518903e-06, 5.621777926622828e-06, 2.2069127159043906e-05, -4.2011233452228125e-05, -0.00011958237131043132, 0.00022461185258584946, 0.0004930712674852231, -0.0009162861492268504, -0.0016040017372431332, 0.002957838681925382, 0.004167408136666513, -0.007815320249162441, -0.008724337846364973, 0.017055673456296473, 0.013811644768052621, -0.03147901115299701, -0.010696487219416618, 0.05550334354684831, -0.029552422349758103, -0.14872283725876634, 0.11154977407311892, 0.6219647267905944, 0.6999028954313752, 0.23434515809573, -0.12511177383095032, -0.06104095710143387, 0.0761139480522835, 0.03719681689221546, -0.032310389282768574, -0.017091243750773335, 0.012266119697148558, 0.0066352315753564015, -0.003972343638997856, -0.0021424882600766877, 0.001061804034215182, 0.0005679401094006045, -0.00021842536867226148, -0.00011542353567481162, 3.3642363024348023e-05, 1.7488006506210815e-05, -3.3088713453500435e-06, -1.7146899694083002e-06, 1.590844923091787e-07, 8.23239576159009e-08],
        "dec_hi": [8.23239576159009e-08, -1.590844923091787e-07, -1.7146899694083002e-06, 3.3088713453500435e-06, 1.7488006506210815e-05, -3.3642363024348023e-05, -0.00011542353567481162, 0.00021842536867226148, 0.0005679401094006045, -0.001061804034215182, -0.0021424882600766877, 0.003972343638997856, 0.0066352315753564015, -0.012266119697148558, -0.017091243750773335, 0.032310389282768574, 0.03719681689221546, -0.0761139480522835, -0.06104095710143387, 0.12511177383095032, 0.23434515809573, -0.6999028954313752, 0.6219647267905944, -0.11154977407311892, -0.14872283725876634, 0.029552422349758103, 0.05550334354684831, 0.010696487219416618, -0.03147901115299701, -0.013811644768052621, 0.017055673456296473, 0.008724337846364973, -0.007815320249162441, -0.004167408136666513, 0.002957838681925382, 0.0016040017372431332, -0.0009162861492268504, -0.0004930712674852231, 0.00022461185258584946, 0.00011958237131043132, -4.2011233452228125e-05, -2.2069127159043906e-05, 5.621777926622828e-06, 2.919914157518903e-06, -4.780561751448263e-07, -2.476812003179574e-07, 1.9514912334755294e-08, 1.0098689021190807e-08],
        "rec_lo": [8.23239576159009e-08, 1.590844923091787e-07, -1.7146899694083002e-06, -3.3088713453500435e-06, 1.7488006506210815e-05, 3.3642363024348023e-05, -0.00011542353567481162, -0.00021842536867226148, 0.0005679401094006045, 0.001061804034215182, -0.0021424882600766877, -0.003972343638997856, 0.0066352315753564015, 0.012266119697148558, -0.017091243750773335, -0.032310389282768574, 0.03719681689221546, 0.0761139480522835, -0.06104095710143387, -0.12511177383095032, 0.23434515809573, 0.6999028954313752, 0.6219647267905944, 0.11154977407311892, -0.14872283725876634, -0.029552422349758103, 0.05550334354684831, -0.010696487219416618, -0.03147901115299701, 0.013811644768052621, 0.017055673456296473, -0.008724337846364973, -0.007815320249162441, 0.004167408136666513, 0.002957838681925382, -0.0016040017372431332, -0.0009162861492268504, 0.0004930712674852231, 0.00022461185258584946, -0.00011958237131043132, -4.2011233452228125e-05, 2.2069127159043906e-05, 5.621777926622828e-06, -2.919914157518903e-06, -4.780561751448263e-07, 2.476812003179574e-07, 1.9514912334755294e-08, -1.0098689021190807e-08],
        "rec_hi": [1.0098689021190807e-08, 1.9514912334755294e-08, -2.476812003179574e-07, -4.780561751448263e-07, 2.919914157518903e-06, 5.621777926622828e-06, -2.2069127159043906e-05, -4.2011233452228125e-05, 0.00011958237131043132, 0.00022461185258584946, -0.0004930712674852231, -0.0009162861492268504, 0.0016040017372431332, 0.002957838681925382, -0.004167408136666513, -0.007815320249162441, 0.008724337846364973, 0.017055673456296473, -0.013811644768052621, -0.03147901115299701, 0.010696487219416618, 0.05550334354684831, 0.029552422349758103, -0.14872283725876634, -0.11154977407311892, 0.6219647267905944, -0.6999028954313752, 0.23434515809573, 0.12511177383095032, -0.06104095710143387, -0.0761139480522835, 0.03719681689221546, 0.032310389282768574, -0.017091243750773335, -0.012266119697148558, 0.0066352315753564015, 0.003972343638997856, -0.0021424882600766877, -0.001061804034215182, 0.0005679401094006045, 0.00021842536867226148, -0.00011542353567481162, -3.3642363024348023e-05, 1.7488006506210815e-05, 3.3088713453500435e-06, -1.7146899694083002e-06, -1.590844923091787e-07, 8.23239576159009e-08],
        "offsets": (0, 0, 0),
    },
    "sym25": {
        "orthogonal": True,
        "dec_lo": [3.5181628441549328e-09, -9.033974338489513e-09, -8.726888972649511e-08, 2.2887344939373027e-07, 1.0350897170719602e-06, -2.7772739015872388e-06, -7.741230699918608e-06, 2.165497447945293e-05, 4.072337037518574e-05, -0.00012271835460127246, -0.0001604831975504078, 0.0005395929755300394, 0.0004997084461730609, -0.0018952122143312423, -0.0012775974773348532, 0.005350412612786815, 0.0025772047047036787, -0.012279777315009106, -0.003085011194248901, 0.024672172084520095, 2.615043712002808e-05, -0.04420937805965593, 0.009229055709631659, 0.05866218795524453, -0.07242470318502015, -0.1277317536107698, 0.24941439732382753, 0.7076642928867717, 0.6082309387685099, 0.10290415160848941, -0.1432457294926875, -0.01996773991102302, 0.07868105030913199, 0.01795358985856169, -0.03080706447703697, -0.006533230396278916, 0.012820906074039566, 0.0030062167402340545, -0.004323350857041452, -0.0012128462329418462, 0.001107393392468075, 0.00035390217475541035, -0.00021808235096021814, -7.653175784989108e-05, 3.0919020062712735e-05, 1.143352123384769e-05, -3.0027829731794107e-06, -1.138764985179378e-06, 1.4853706752996502e-07, 5.7845813191786236e-08],
        "dec_hi": [5.7845813191786236e-08, -1.4853706752996502e-07, -1.138764985179378e-06, 3.0027829731794107e-06, 1.143352123384769e-05, -3.0919020062712735e-05, -7.653175784989108e-05, 0.00021808235096021814, 0.00035390217475541035, -0.001107393392468075, -0.0012128462329418462, 0.004323350857041452, 0.0030062167402340545, -0.012820906074039566, -0.006533230396278916, 0.03080706447703697, 0.01795358985856169, -0.07868105030913199, -0.01996773991102302, 0.1432457294926875, 0.10290415160848941, -0.6082309387685099, 0.7076642928867717, -0.24941439732382753, -0.1277317536107698, 0.07242470318502015, 0.05866218795524453, -0.009229055709631659, -0.04420937805965593, -2.615043712002808e-05, 0.024672172084520095, 0.003085011194248901, -0.012279777315009106, -0.0025772047047036787, 0.005350412612786815, 0.0012775974773348532, -0.0018952122143312423, -0.0004997084461730609, 0.0005395929755300394, 0.0001604831975504078, -0.00012271835460127246, -4.072337037518574e-05, 2.165497447945293e-05, 7.741230699918608e-06, -2.7772739015872388e-06, -1.0350897170719602e-06, 2.2887344939373027e-07, 8.726888972649511e-08, -9.033974338489513e-09, -3.5181628441549328e-09],
        "rec_lo": [5.7845813191786236e-08, 1.4853706752996502e-07, -1.138764985179378e-06, -3.0027829731794107e-06, 1.143352123384769e-05, 3.0919020062712735e-05, -7.653175784989108e-05, -0.00021808235096021814, 0.00035390217475541035, 0.001107393392468075, -0.0012128462329418462, -0.004323350857041452, 0.0030062167402340545, 0.012820906074039566, -0.006533230396278916, -0.03080706447703697, 0.01795358985856169, 0.07868105030913199, -0.01996773991102302, -0.1432457294926875, 0.10290415160848941, 0.6082309387685099, 0.7076642928867717, 0.24941439732382753, -0.1277317536107698, -0.07242470318502015, 0.05866218795524453, 0.009229055709631659, -0.04420937805965593, 2.615043712002808e-05, 0.024672172084520095, -0.003085011194248901, -0.012279777315009106, 0.0025772047047036787, 0.005350412612786815, -0.0012775974773348532, -0.0018952122143312423, 0.0004997084461730609, 0.0005395929755300394, -0.0001604831975504078, -0.00012271835460127246, 4.072337037518574e-05, 2.165497447945293e-05, -7.741230699918608e-06, -2.7772739015872388e-06, 1.0350897170719602e-06, 2.2887344939373027e-07, -8.726888972649511e-08, -9.033974338489513e-09, 3.5181628441549328e-09],
        "rec_hi": [-3.5181628441549328e-09, -9.033974338489513e-09, 8.726888972649511e-08, 2.2887344939373027e-07, -1.0350897170719602e-06, -2.7772739015872388e-06, 7.741230699918608e-06, 2.165497447945293e-05, -4.072337037518574e-05, -0.00012271835460127246, 0.0001604831975504078, 0.0005395929755300394, -0.0004997084461730609, -0.0018952122143312423, 0.0012775974773348532, 0.005350412612786815, -0.0025772047047036787, -0.012279777315009106, 0.003085011194248901, 0.024672172084520095, -2.615043712002808e-05, -0.04420937805965593, -0.009229055709631659, 0.05866218795524453, 0.07242470318502015, -0.1277317536107698, -0.24941439732382753, 0.7076642928867717, -0.6082309387685099, 0.10290415160848941, 0.1432457294926875, -0.01996773991102302, -0.07868105030913199, 0.01795358985856169, 0.03080706447703697, -0.006533230396278916, -0.012820906074039566, 0.0030062167402340545, 0.004323350857041452, -0.0012128462329418462, -0.001107393392468075, 0.00035390217475541035, 0.00021808235096021814, -7.653175784989108e-05, -3.0919020062712735e-05, 1.143352123384769e-05, 3.0027829731794107e-06, -1.138764985179378e-06, -1.4853706752996502e-07, 5.7845813191786236e-08],
        "offsets": (0, 0, 0),
    },
    "coif1": {
        "orthogonal": True,
        "dec_lo": [-0.015655728135791993, -0.07273261951252645, 0.3848648468648577, 0.8525720202116004, 0.33789766245748176, -0.07273261951252645],
        "dec_hi": [-0.07273261951252645, -0.33789766245748176, 0.8525720202116004, -0.3848648468648577, -0.07273261951252645, 0.015655728135791993],
        "rec_lo": [-0.07273261951252645, 0.33789766245748176, 0.8525720202116004, 0.3848648468648577, -0.07273261951252645, -0.015655728135791993],
        "rec_hi": [0.015655728135791993, -0.07273261951252645, -0.3848648468648577, 0.8525720202116004, -0.33789766245748176, -0.07273261951252645],
        "offsets": (0, 0, 0),
    },
    "coif2": {
        "orthogonal": True,
        "dec_lo": [-0.000720549445520347, -0.001823208870911032, 0.005611434819368834, 0.02368017194684777, -0.059434418646431085, -0.07648859907828076, 0.41700518442323903, 0.8127236354494135, 0.38611006682276283, -0.0673725547237256, -0.04146493678687178, 0.01638733646320364],
        "dec_hi": [0.01638733646320364, 0.04146493678687178, -0.0673725547237256, -0.38611006682276283, 0.8127236354494135, -0.41700518442323903, -0.07648859907828076, 0.059434418646431085, 0.02368017194684777, -0.005611434819368834, -0.001823208870911032, 0.000720549445520347],
        "rec_lo": [0.01638733646320364, -0.04146493678687178, -0.0673725547237256, 0.38611006682276283, 0.8127236354494135, 0.41700518442323903, -0.07648859907828076, -0.059434418646431085, 0.02368017194684777, 0.005611434819368834, -0.001823208870911032, -0.000720549445520347],
        "rec_hi": [0.000720549445520347, -0.001823208870911032, -0.005611434819368834, 0.02368017194684777, 0.059434418646431085, -0.07648859907828076, -0.41700518442323903, 0.8127236354494135, -0.38611006682276283, -0.0673725547237256, 0.04146493678687178, 0.01638733646320364],
        "offsets": (0, 0, 0),
    },
    "coif3": {
        "orthogonal": True,
        "dec_lo": [-3.4599773197272774e-05, -7.0983302506379e-05, 0.0004662169598204029, 0.0011175187708306303, -0.002574517688136797, -0.009007976136730624, 0.015880544863669452, 0.03455502757329773, -0.08230192710629981, -0.07179982161915484, 0.42848347637737, 0.7937772226260872, 0.4051769024091182, -0.06112339000297254, -0.06577191128146936, 0.023452696142077165, 0.0077825964256727454, -0.0037935128643808015],
        "dec_hi": [-0.0037935128643808015, -0.0077825964256727454, 0.023452696142077165, 0.06577191128146936, -0.06112339000297254, -0.4051769024091182, 0.7937772226260872, -0.42848347637737, -0.07179982161915484, 0.08230192710629981, 0.03455502757329773, -0.015880544863669452, -0.009007976136730624, 0.002574517688136797, 0.0011175187708306303, -0.0004662169598204029, -7.0983302506379e-05, 3.4599773197272774e-05],
        "rec_lo": [-0.0037935128643808015, 0.0077825964256727454, 0.023452696142077165, -0.06577191128146936, -0.06112339000297254, 0.4051769024091182, 0.7937772226260872, 0.42848347637737, -0.07179982161915484, -0.08230192710629981, 0.03455502757329773, 0.015880544863669452, -0.009007976136730624, -0.002574517688136797, 0.0011175187708306303, 0.0004662169598204029, -7.0983302506379e-05, -3.4599773197272774e-05],
        "rec_hi": [3.4599773197272774e-05, -7.0983302506379e-05, -0.0004662169598204029, 0.0011175187708306303, 0.002574517688136797, -0.009007976136730624, -0.015880544863669452, 0.03455502757329773, 0.08230192710629981, -0.07179982161915484, -0.42848347637737, 0.7937772226260872, -0.4051769024091182, -0.06112339000297254, 0.06577191128146936, 0.023452696142077165, -0.0077825964256727454, -0.0037935128643808015],
        "offsets": (0, 0, 0),
    },
    "coif4": {
        "orthogonal": True,
        "dec_lo": [-1.7849909144933466e-06, -3.2596479400307506e-06, 3.1229861599195265e-05, 6.233885431278718e-05, -0.0002599743371222568, -0.0005890202246332164, 0.0012665610789256603, 0.003751434697146086, -0.0056582838001308835, -0.015211728187697211, 0.025082253337949608, 0.03933442260558915, -0.09622042453595264, -0.06662747236681715, 0.43438603311435653, 0.7822389344242826, 0.41530842700068227, -0.05607731960356926, -0.08126671024919373, 0.026682304669604834, 0.016068947131575025, -0.00734616793626805, -0.0016294924252267858, 0.000892313902537003],
        "dec_hi": [0.000892313902537003, 0.0016294924252267858, -0.00734616793626805, -0.016068947131575025, 0.026682304669604834, 0.08126671024919373, -0.05607731960356926, -0.41530842700068227, 0.7822389344242826, -0.43438603311435653, -0.06662747236681715, 0.09622042453595264, 0.03933442260558915, -0.025082253337949608, -0.015211728187697211, 0.0056582838001308835, 0.003751434697146086, -0.0012665610789256603, -0.0005890202246332164, 0.0002599743371222568, 6.233885431278718e-05, -3.1229861599195265e-05, -3.2596479400307506e-06, 1.7849909144933466e-06],
        "rec_lo": [0.000892313902537003, -0.0016294924252267858, -0.00734616793626805, 0.016068947131575025, 0.026682304669604834, -0.08126671024919373, -0.05607731960356926, 0.41530842700068227, 0.7822389344242826, 0.43438603311435653, -0.06662747236681715, -0.09622042453595264, 0.03933442260558915, 0.025082253337949608, -0.015211728187697211, -0.0056582838001308835, 0.003751434697146086, 0.0012665610789256603, -0.0005890202246332164, -0.0002599743371222568, 6.233885431278718e-05, 3.1229861599195265e-05, -3.2596479400307506e-06, -1.7849909144933466e-06],
        "rec_hi": [1.7849909144933466e-06, -3.2596479400307506e-06, -3.1229861599195265e-05, 6.233885431278718e-05, 0.0002599743371222568, -0.0005890202246332164, -0.0012665610789256603, 0.003751434697146086, 0.0056582838001308835, -0.015211728187697211, -0.025082253337949608, 0.03933442260558915, 0.09622042453595264, -0.06662747236681715, -0.43438603311435653, 0.7822389344242826, -0.41530842700068227, -0.05607731960356926, 0.08126671024919373, 0.026682304669604834, -0.016068947131575025, -0.00734616793626805, 0.0016294924252267858, 0.000892313902537003],
        "offsets": (0, 0, 0),
    },
    "coif5": {
        "orthogonal": True,
        "dec_lo": [-5.225300949725289e-07, -4.514103551812257e-07, 1.1811041461687691e-05, 9.536863293070498e-06, -0.00013022310305504798, -9.471144582985225e-05, 0.000940438317471368, 0.0005707607859812176, -0.00510077806463972, -0.0019772543093881665, 0.020911602225268427, 0.0033020842240095946, -0.06398400936483598, 0.0010459641436845724, 0.1485727944045382, -0.018127839435727884, -0.2812246499725803, 0.04426843089079729, 0.6294719829457777, 0.6457620681331337, 0.2724837429829441, 0.05527889566693738, -0.010909045909170986, -0.033143480572509335, -0.005821679330594546, 0.012833094074586996, 0.002141527235687706, -0.002916891972368995, -0.0002562096916301339, 0.0002965755503030698],
        "dec_hi": [0.0002965755503030698, 0.0002562096916301339, -0.002916891972368995, -0.002141527235687706, 0.012833094074586996, 0.005821679330594546, -0.033143480572509335, 0.010909045909170986, 0.05527889566693738, -0.2724837429829441, 0.6457620681331337, -0.6294719829457777, 0.04426843089079729, 0.2812246499725803, -0.018127839435727884, -0.1485727944045382, 0.0010459641436845724, 0.06398400936483598, 0.0033020842240095946, -0.020911602225268427, -0.0019772543093881665, 0.00510077806463972, 0.0005707607859812176, -0.000940438317471368, -9.471144582985225e-05, 0.00013022310305504798, 9.536863293070498e-06, -1.1811041461687691e-05, -4.514103551812257e-07, 5.225300949725289e-07],
        "rec_lo": [0.0002965755503030698, -0.0002562096916301339, -0.002916891972368995, 0.002141527235687706, 0.012833094074586996, -0.005821679330594546, -0.033143480572509335, -0.010909045909170986, 0.05527889566693738, 0.2724837429829441, 0.6457620681331337, 0.6294719829457777, 0.04426843089079729, -0.2812246499725803, -0.018127839435727884, 0.1485727944045382, 0.0010459641436845724, -0.06398400936483598, 0.0033020842240095946, 0.020911602225268427, -0.0019772543093881665, -0.00510077806463972, 0.0005707607859812176, 0.000940438317471368, -9.471144582985225e-05, -0.00013022310305504798, 9.536863293070498e-06, 1.1811041461687691e-05, -4.514103551812257e-07, -5.225300949725289e-07],
        "rec_hi": [5.225300949725289e-07, -4.514103551812257e-07, -1.1811041461687691e-05, 9.536863293070498e-06, 0.00013022310305504798, -9.471144582985225e-05, -0.000940438317471368, 0.0005707607859812176, 0.00510077806463972, -0.0019772543093881665, -0.020911602225268427, 0.0033020842240095946, 0.06398400936483598, 0.0010459641436845724, -0.1485727944045382, -0.018127839435727884, 0.2812246499725803, 0.04426843089079729, -0.6294719829457777, 0.6457620681331337, -0.2724837429829441, 0.05527889566693738, 0.010909045909170986, -0.033143480572509335, 0.005821679330594546, 0.012833094074586996, -0.002141527235687706, -0.002916891972368995, 0.0002562096916301339, 0.0002965755503030698],
        "offsets": (0, 0, 0),
    },
    "bior1.1": {
        "orthogonal": False,
        "dec_lo": [0.7071067811865476, 0.7071067811865476],
        "dec_hi": [0.7071067811865476, -0.7071067811865476],
        "rec_lo": [0.7071067811865476, 0.7071067811865476],
        "rec_hi": [-0.7071067811865476, 0.7071067811865476],
        "offsets": (0, 0, 0),
    },
    "bior2.2": {
        "orthogonal": False,
        "dec_lo": [-0.1767766952966369, 0.3535533905932738, 1.0606601717798212, 0.3535533905932738, -0.1767766952966369],
        "dec_hi": [0.3535533905932738, -0.7071067811865476, 0.3535533905932738],
        "rec_lo": [0.3535533905932738, 0.7071067811865476, 0.3535533905932738],
        "rec_hi": [0.1767766952966369, 0.3535533905932738, -1.0606601717798212, 0.3535533905932738, 0.1767766952966369],
        "offsets": (0, -1, 1),
    },
    "bior2.4": {
        "orthogonal": False,
        "dec_lo": [0.03314563036811941, -0.06629126073623882, -0.1767766952966369, 0.4198446513295126, 0.9943689110435825, 0.4198446513295126, -0.1767766952966369, -0.06629126073623882, 0.03314563036811941],
        "dec_hi": [0.3535533905932738, -0.7071067811865476, 0.3535533905932738],
        "rec_lo": [0.3535533905932738, 0.7071067811865476, 0.3535533905932738],
        "rec_hi": [-0.03314563036811941, -0.06629126073623882, 0.1767766952966369, 0.4198446513295126, -0.9943689110435825, 0.4198446513295126, 0.1767766952966369, -0.06629126073623882, -0.03314563036811941],
        "offsets": (0, -3, 3),
    },
    "bior4.4": {
        "orthogonal": False,
        "dec_lo": [0.03782845550699546, -0.02384946501938, -0.1106244044184234, 0.37740285561265374, 0.8526986790094034, 0.37740285561265374, -0.1106244044184234, -0.02384946501938, 0.03782845550699546],
        "dec_hi": [-0.06453888262893843, 0.04068941760955844, 0.4180922732222122, -0.7884856164056644, 0.4180922732222122, 0.04068941760955844, -0.06453888262893843],
        "rec_lo": [-0.06453888262893843, -0.04068941760955844, 0.4180922732222122, 0.7884856164056644, 0.4180922732222122, -0.04068941760955844, -0.06453888262893843],
        "rec_hi": [-0.03782845550699546, -0.02384946501938, 0.1106244044184234, 0.37740285561265374, -0.8526986790094034, 0.37740285561265374, 0.1106244044184234, -0.02384946501938, -0.03782845550699546],
        "offsets": (0, -1, 1),
    },
    "bior5.5": {
        "orthogonal": False,
        "dec_lo": [0.012084344405043537, -0.060421722025217686, 0.04143203796014927, 0.27621358640099514, -0.468527295932688, -0.5437954982269592, 1.4501213286052244, 1.4501213286052244, -0.5437954982269592, -0.468527295932688, 0.27621358640099514, 0.04143203796014927, -0.060421722025217686, 0.012084344405043537],
        "dec_hi": [0.04419417382415922, -0.2209708691207961, 0.4419417382415922, -0.4419417382415922, 0.2209708691207961, -0.04419417382415922],
        "rec_lo": [0.04419417382415922, 0.2209708691207961, 0.4419417382415922, 0.4419417382415922, 0.2209708691207961, 0.04419417382415922],
        "rec_hi": [-0.012084344405043537, -0.060421722025217686, -0.04143203796014927, 0.27621358640099514, 0.468527295932688, -0.5437954982269592, -1.4501213286052244, 1.4501213286052244, 0.5437954982269592, -0.468527295932688, -0.27621358640099514, 0.04143203796014927, 0.060421722025217686, 0.012084344405043537],
        "offsets": (0, -4, 4),
    },
}
