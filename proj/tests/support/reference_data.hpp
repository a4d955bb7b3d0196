#pragma once

// Reference curves (x, y) used by regression and acceptance tests.

#include <array>
#include <utility>

namespace focal::testing {

using Point = std::pair<double, double>;

inline constexpr std::array<Point, 49> kHGamma0p5{{
    Point{2, 0.292893218813452},
    Point{3, 0.292893218813452},
    Point{4, 0.292893218813452},
    Point{5, 0.292893218813452},
    Point{6, 0.292893218813452},
    Point{7, 0.292893218813452},
    Point{8, 0.292893218813452},
    Point{9, 0.292893218813452},
    Point{10, 0.292893218813452},
    Point{11, 0.292893218813452},
    Point{12, 0.292893218813452},
    Point{13, 0.292893218813452},
    Point{14, 0.292893218813452},
    Point{15, 0.292893218813452},
    Point{16, 0.292893218813452},
    Point{17, 0.292893218813452},
    Point{18, 0.292893218813452},
    Point{19, 0.292893218813452},
    Point{20, 0.292893218813452},
    Point{21, 0.292893218813452},
    Point{22, 0.292893218813452},
    Point{23, 0.292893218813452},
    Point{24, 0.292893218813452},
    Point{25, 0.292893218813452},
    Point{26, 0.292893218813452},
    Point{27, 0.292893218813452},
    Point{28, 0.292893218813452},
    Point{29, 0.292893218813452},
    Point{30, 0.292893218813452},
    Point{31, 0.292893218813452},
    Point{32, 0.292893218813452},
    Point{33, 0.292893218813452},
    Point{34, 0.292893218813452},
    Point{35, 0.292893218813452},
    Point{36, 0.292893218813452},
    Point{37, 0.292893218813452},
    Point{38, 0.292893218813452},
    Point{39, 0.292893218813452},
    Point{40, 0.292893218813452},
    Point{41, 0.292893218813452},
    Point{42, 0.292893218813452},
    Point{43, 0.292893218813452},
    Point{44, 0.292893218813452},
    Point{45, 0.292893218813452},
    Point{46, 0.292893218813452},
    Point{47, 0.292893218813452},
    Point{48, 0.292893218813452},
    Point{49, 0.292893218813452},
    Point{50, 0.292893218813452},
}};

inline constexpr std::array<Point, 49> kHGamma1{{
    Point{2, 0.5},
    Point{3, 0.52832083343362},
    Point{4, 0.52832083343362},
    Point{5, 0.52832083343362},
    Point{6, 0.52832083343362},
    Point{7, 0.52832083343362},
    Point{8, 0.52832083343362},
    Point{9, 0.52832083343362},
    Point{10, 0.52832083343362},
    Point{11, 0.52832083343362},
    Point{12, 0.52832083343362},
    Point{13, 0.52832083343362},
    Point{14, 0.52832083343362},
    Point{15, 0.52832083343362},
    Point{16, 0.52832083343362},
    Point{17, 0.52832083343362},
    Point{18, 0.52832083343362},
    Point{19, 0.52832083343362},
    Point{20, 0.52832083343362},
    Point{21, 0.52832083343362},
    Point{22, 0.52832083343362},
    Point{23, 0.52832083343362},
    Point{24, 0.52832083343362},
    Point{25, 0.52832083343362},
    Point{26, 0.52832083343362},
    Point{27, 0.52832083343362},
    Point{28, 0.52832083343362},
    Point{29, 0.52832083343362},
    Point{30, 0.52832083343362},
    Point{31, 0.52832083343362},
    Point{32, 0.52832083343362},
    Point{33, 0.52832083343362},
    Point{34, 0.52832083343362},
    Point{35, 0.52832083343362},
    Point{36, 0.52832083343362},
    Point{37, 0.52832083343362},
    Point{38, 0.52832083343362},
    Point{39, 0.52832083343362},
    Point{40, 0.52832083343362},
    Point{41, 0.52832083343362},
    Point{42, 0.52832083343362},
    Point{43, 0.52832083343362},
    Point{44, 0.52832083343362},
    Point{45, 0.52832083343362},
    Point{46, 0.52832083343362},
    Point{47, 0.52832083343362},
    Point{48, 0.52832083343362},
    Point{49, 0.52832083343362},
    Point{50, 0.52832083343362},
}};

inline constexpr std::array<Point, 49> kHGamma20{{
    Point{2, 0.999999046325684},
    Point{3, 1.5844858570487},
    Point{4, 1.99365757612211},
    Point{5, 2.29515808630867},
    Point{6, 2.51753620010795},
    Point{7, 2.67871921748462},
    Point{8, 2.79237372365946},
    Point{9, 2.86931838078094},
    Point{10, 2.9180591881791},
    Point{11, 2.94520915187907},
    Point{12, 2.95587160589104},
    Point{13, 2.95587160589104},
    Point{14, 2.95587160589104},
    Point{15, 2.95587160589104},
    Point{16, 2.95587160589104},
    Point{17, 2.95587160589104},
    Point{18, 2.95587160589104},
    Point{19, 2.95587160589104},
    Point{20, 2.95587160589104},
    Point{21, 2.95587160589104},
    Point{22, 2.95587160589104},
    Point{23, 2.95587160589104},
    Point{24, 2.95587160589104},
    Point{25, 2.95587160589104},
    Point{26, 2.95587160589104},
    Point{27, 2.95587160589104},
    Point{28, 2.95587160589104},
    Point{29, 2.95587160589104},
    Point{30, 2.95587160589104},
    Point{31, 2.95587160589104},
    Point{32, 2.95587160589104},
    Point{33, 2.95587160589104},
    Point{34, 2.95587160589104},
    Point{35, 2.95587160589104},
    Point{36, 2.95587160589104},
    Point{37, 2.95587160589104},
    Point{38, 2.95587160589104},
    Point{39, 2.95587160589104},
    Point{40, 2.95587160589104},
    Point{41, 2.95587160589104},
    Point{42, 2.95587160589104},
    Point{43, 2.95587160589104},
    Point{44, 2.95587160589104},
    Point{45, 2.95587160589104},
    Point{46, 2.95587160589104},
    Point{47, 2.95587160589104},
    Point{48, 2.95587160589104},
    Point{49, 2.95587160589104},
    Point{50, 2.95587160589104},
}};

inline constexpr std::array<Point, 49> kHGamma100{{
    Point{2, 1},
    Point{3, 1.58496250072116},
    Point{4, 1.99999999999936},
    Point{5, 2.32192809441438},
    Point{6, 2.58496246950857},
    Point{7, 2.80735435501138},
    Point{8, 2.99999523649527},
    Point{9, 3.16990069077894},
    Point{10, 3.32183985982713},
    Point{11, 3.45918058249838},
    Point{12, 3.58436597582024},
    Point{13, 3.69920364907841},
    Point{14, 3.80505265827097},
    Point{15, 3.90295048047733},
    Point{16, 3.99370221738772},
    Point{17, 4.07794452864719},
    Point{18, 4.15619186066929},
    Point{19, 4.22886994294639},
    Point{20, 4.29633999327239},
    Point{21, 4.35891608869335},
    Point{22, 4.41687756856133},
    Point{23, 4.47047778510773},
    Point{24, 4.51995024434857},
    Point{25, 4.56551285273497},
    Point{26, 4.60737081992397},
    Point{27, 4.64571867930445},
    Point{28, 4.68074157493267},
    Point{29, 4.71261622817619},
    Point{30, 4.7415114676573},
    Point{31, 4.76758871641806},
    Point{32, 4.79100226852174},
    Point{33, 4.81189952374772},
    Point{34, 4.83042116978648},
    Point{35, 4.84670138239203},
    Point{36, 4.86086798942739},
    Point{37, 4.87304264124267},
    Point{38, 4.88334102008057},
    Point{39, 4.8918729728088},
    Point{40, 4.89874278706781},
    Point{41, 4.90404931626217},
    Point{42, 4.90788624971978},
    Point{43, 4.91034225935592},
    Point{44, 4.91150127694133},
    Point{45, 4.91150127694133},
    Point{46, 4.91150127694133},
    Point{47, 4.91150127694133},
    Point{48, 4.91150127694133},
    Point{49, 4.91150127694133},
    Point{50, 4.91150127694133},
}};

inline constexpr std::array<Point, 20> kDstarUniform3{{
    Point{0, 0.6667},
    Point{0.526315789473684, 0.4629},
    Point{1.05263157894737, 0.3214},
    Point{1.57894736842105, 0.2232},
    Point{2.10526315789474, 0.1549},
    Point{2.63157894736842, 0.1076},
    Point{3.15789473684211, 0.0747},
    Point{3.68421052631579, 0.0519},
    Point{4.21052631578947, 0.0360},
    Point{4.73684210526316, 0.0250},
    Point{5.26315789473684, 0.0174},
    Point{5.78947368421053, 0.0121},
    Point{6.31578947368421, 0.0084},
    Point{6.84210526315789, 0.0058},
    Point{7.36842105263158, 0.0040},
    Point{7.89473684210526, 0.0028},
    Point{8.42105263157895, 0.0019},
    Point{8.94736842105263, 0.0014},
    Point{9.47368421052632, 0.0009},
    Point{10, 0.0007},
}};

inline constexpr std::array<Point, 20> kDstarSkewed3{{
    Point{0, 0.270426041486378},
    Point{0.526315789473684, 0.193270123296634},
    Point{1.05263157894737, 0.147236206978196},
    Point{1.57894736842105, 0.111575341768706},
    Point{2.10526315789474, 0.0774696129173672},
    Point{2.63157894736842, 0.0537891332478085},
    Point{3.15789473684211, 0.0373471706724107},
    Point{3.68421052631579, 0.0259310956138338},
    Point{4.21052631578947, 0.0180046227767001},
    Point{4.73684210526316, 0.0125010699956052},
    Point{5.26315789473684, 0.0086798125666515},
    Point{5.78947368421053, 0.00602661581918083},
    Point{6.31578947368421, 0.00418443347170251},
    Point{6.84210526315789, 0.00290535916083735},
    Point{7.36842105263158, 0.00201726515920138},
    Point{7.89473684210526, 0.00140063878414086},
    Point{8.42105263157895, 0.000972499323993806},
    Point{8.94736842105263, 0.000675231148727989},
    Point{9.47368421052632, 0.000468830253105065},
    Point{10, 0.000325520833333333},
}};

inline constexpr std::array<Point, 40> kBinomLinear{{
    Point{0, 1.86897353302468},
    Point{0.256410256410256, 1.72520148068136},
    Point{0.512820512820513, 1.5964368288516},
    Point{0.769230769230769, 1.48093490032203},
    Point{1.02564102564103, 1.37716494074111},
    Point{1.28205128205128, 1.28378305481447},
    Point{1.53846153846154, 1.19960863706492},
    Point{1.79487179487179, 1.12360383941749},
    Point{2.05128205128205, 1.05485567846468},
    Point{2.30769230769231, 0.992560437775296},
    Point{2.56410256410256, 0.936010066117591},
    Point{2.82051282051282, 0.884580311913943},
    Point{3.07692307692308, 0.837720368442281},
    Point{3.33333333333333, 0.79494383395249},
    Point{3.58974358974359, 0.75582081658224},
    Point{3.84615384615385, 0.719971036262722},
    Point{4.1025641025641, 0.68705779515633},
    Point{4.35897435897436, 0.656782704959771},
    Point{4.61538461538461, 0.628881073978844},
    Point{4.87179487179487, 0.603117869530876},
    Point{5.12820512820513, 0.579284182213393},
    Point{5.38461538461539, 0.55719412811481},
    Point{5.64102564102564, 0.536682133326598},
    Point{5.8974358974359, 0.517600552312949},
    Point{6.15384615384615, 0.499817577947396},
    Point{6.41025641025641, 0.483215406461021},
    Point{6.66666666666667, 0.467688625271974},
    Point{6.92307692307692, 0.453142795774809},
    Point{7.17948717948718, 0.439493206741852},
    Point{7.43589743589744, 0.426663777097974},
    Point{7.69230769230769, 0.414586089535814},
    Point{7.94871794871795, 0.403198538793687},
    Point{8.2051282051282, 0.392445580469108},
    Point{8.46153846153846, 0.382277068026912},
    Point{8.71794871794872, 0.372647667216997},
    Point{8.97435897435897, 0.363516338472746},
    Point{9.23076923076923, 0.354845879043328},
    Point{9.48717948717949, 0.34660251764392},
    Point{9.74358974358974, 0.338755555307116},
    Point{10, 0.331277046903441},
}};

inline constexpr std::array<Point, 40> kBinomLog{{
    Point{0, 1.56106951246009},
    Point{0.256410256410256, 1.40868607432553},
    Point{0.512820512820513, 1.27462837286063},
    Point{0.769230769230769, 1.15652333985444},
    Point{1.02564102564103, 1.0523170924776},
    Point{1.28205128205128, 0.960230997116218},
    Point{1.53846153846154, 0.878723876083927},
    Point{1.79487179487179, 0.806459488657824},
    Point{2.05128205128205, 0.742278541735777},
    Point{2.30769230769231, 0.685174591485985},
    Point{2.56410256410256, 0.634273288220858},
    Point{2.82051282051282, 0.588814494569525},
    Point{3.07692307692308, 0.548136873722734},
    Point{3.33333333333333, 0.511664601684787},
    Point{3.58974358974359, 0.478895906461797},
    Point{3.84615384615385, 0.449393179117787},
    Point{4.1025641025641, 0.422774437644331},
    Point{4.35897435897436, 0.398705955474781},
    Point{4.61538461538461, 0.37689589296609},
    Point{4.87179487179487, 0.357088792898985},
    Point{5.12820512820513, 0.339060820549685},
    Point{5.38461538461539, 0.322615645624371},
    Point{5.64102564102564, 0.307580877716264},
    Point{5.8974358974359, 0.293804979282376},
    Point{6.15384615384615, 0.281154590732357},
    Point{6.41025641025641, 0.269512211323401},
    Point{6.66666666666667, 0.25877418737532},
    Point{6.92307692307692, 0.248848966040661},
    Point{7.17948717948718, 0.239655578642176},
    Point{7.43589743589744, 0.231122322557687},
    Point{7.69230769230769, 0.22318561490506},
    Point{7.94871794871795, 0.21578899495586},
    Point{8.2051282051282, 0.208882255369544},
    Point{8.46153846153846, 0.202420685063043},
    Point{8.71794871794872, 0.196364408875256},
    Point{8.97435897435897, 0.190677811205508},
    Point{9.23076923076923, 0.185329032545095},
    Point{9.48717948717949, 0.180289529320717},
    Point{9.74358974358974, 0.175533688761666},
    Point{10, 0.171038491617808},
}};

inline constexpr std::array<Point, 40> kBinomExact{{
    Point{0, 0.926678158905707},
    Point{0.256410256410256, 0.802029616707351},
    Point{0.512820512820513, 0.706302335579836},
    Point{0.769230769230769, 0.631313279343153},
    Point{1.02564102564103, 0.571386830825779},
    Point{1.28205128205128, 0.52255307601459},
    Point{1.53846153846154, 0.482010366728699},
    Point{1.79487179487179, 0.447762815940995},
    Point{2.05128205128205, 0.418374253433097},
    Point{2.30769230769231, 0.392800168836712},
    Point{2.56410256410256, 0.370272188811423},
    Point{2.82051282051282, 0.350218154407906},
    Point{3.07692307692308, 0.332206468455839},
    Point{3.33333333333333, 0.315907088633669},
    Point{3.58974358974359, 0.301064005937702},
    Point{3.84615384615385, 0.287475695730514},
    Point{4.1025641025641, 0.274981136190271},
    Point{4.35897435897436, 0.263449737867867},
    Point{4.61538461538461, 0.252774037233913},
    Point{4.87179487179487, 0.242864355233422},
    Point{5.12820512820513, 0.233644861222729},
    Point{5.38461538461539, 0.225050648139088},
    Point{5.64102564102564, 0.217025539777214},
    Point{5.8974358974359, 0.20952043143087},
    Point{6.15384615384615, 0.202492021630473},
    Point{6.41025641025641, 0.19590183258808},
    Point{6.66666666666667, 0.189715445267575},
    Point{6.92307692307692, 0.183901895189809},
    Point{7.17948717948718, 0.178433189556822},
    Point{7.43589743589744, 0.173283916705273},
    Point{7.69230769230769, 0.168430926445099},
    Point{7.94871794871795, 0.163853065326729},
    Point{8.2051282051282, 0.159530954889386},
    Point{8.46153846153846, 0.155446803886352},
    Point{8.71794871794872, 0.151584247654161},
    Point{8.97435897435897, 0.147928209402217},
    Point{9.23076923076923, 0.1444647793985},
    Point{9.48717948717949, 0.141181108925176},
    Point{9.74358974358974, 0.138065316554419},
    Point{10, 0.135106404807126},
}};

inline constexpr std::array<Point, 40> kBinomOptimized{{
    Point{0, 0.926678158905707},
    Point{0.256410256410256, 0.802029616707351},
    Point{0.512820512820513, 0.706302335579836},
    Point{0.769230769230769, 0.631313279343153},
    Point{1.02564102564103, 0.571386830825779},
    Point{1.28205128205128, 0.52255307601459},
    Point{1.53846153846154, 0.482010366728699},
    Point{1.79487179487179, 0.447762815940995},
    Point{2.05128205128205, 0.415351993384161},
    Point{2.30769230769231, 0.384064804746933},
    Point{2.56410256410256, 0.361478569552778},
    Point{2.82051282051282, 0.332156121240441},
    Point{3.07692307692308, 0.318547098048289},
    Point{3.33333333333333, 0.296316880552112},
    Point{3.58974358974359, 0.282823474268607},
    Point{3.84615384615385, 0.256196838102942},
    Point{4.1025641025641, 0.240468775016587},
    Point{4.35897435897436, 0.229782504424074},
    Point{4.61538461538461, 0.21732344199738},
    Point{4.87179487179487, 0.202425365924364},
    Point{5.12820512820513, 0.191648327936008},
    Point{5.38461538461539, 0.182688903510854},
    Point{5.64102564102564, 0.16682071836134},
    Point{5.8974358974359, 0.154514196696357},
    Point{6.15384615384615, 0.154398630932603},
    Point{6.41025641025641, 0.136508899093823},
    Point{6.66666666666667, 0.121484879230668},
    Point{6.92307692307692, 0.130912898086112},
    Point{7.17948717948718, 0.118492528581412},
    Point{7.43589743589744, 0.104072707330257},
    Point{7.69230769230769, 0.101404937400595},
    Point{7.94871794871795, 0.102777055876082},
    Point{8.2051282051282, 0.0957358871383032},
    Point{8.46153846153846, 0.090873730739845},
    Point{8.71794871794872, 0.0770527942267144},
    Point{8.97435897435897, 0.0842326683271192},
    Point{9.23076923076923, 0.074876248410419},
    Point{9.48717948717949, 0.0730595502961868},
    Point{9.74358974358974, 0.0742258227152651},
    Point{10, 0.0598234471935863},
}};

inline constexpr std::array<Point, 40> kBinomConverse{{
    Point{0, 0.86897353302468},
    Point{0.256410256410256, 0.706141922718349},
    Point{0.512820512820513, 0.56982444572697},
    Point{0.769230769230769, 0.444294694027503},
    Point{1.02564102564103, 0.32972418876405},
    Point{1.28205128205128, 0.226466779476781},
    Point{1.53846153846154, 0.133405371347466},
    Point{1.79487179487179, 0.0495331752802962},
    Point{2.05128205128205, 0},
    Point{2.30769230769231, 0},
    Point{2.56410256410256, 0},
    Point{2.82051282051282, 0},
    Point{3.07692307692308, 0},
    Point{3.33333333333333, 0},
    Point{3.58974358974359, 0},
    Point{3.84615384615385, 0},
    Point{4.1025641025641, 0},
    Point{4.35897435897436, 0},
    Point{4.61538461538461, 0},
    Point{4.87179487179487, 0},
    Point{5.12820512820513, 0},
    Point{5.38461538461539, 0},
    Point{5.64102564102564, 0},
    Point{5.8974358974359, 0},
    Point{6.15384615384615, 0},
    Point{6.41025641025641, 0},
    Point{6.66666666666667, 0},
    Point{6.92307692307692, 0},
    Point{7.17948717948718, 0},
    Point{7.43589743589744, 0},
    Point{7.69230769230769, 0},
    Point{7.94871794871795, 0},
    Point{8.2051282051282, 0},
    Point{8.46153846153846, 0},
    Point{8.71794871794872, 0},
    Point{8.97435897435897, 0},
    Point{9.23076923076923, 0},
    Point{9.48717948717949, 0},
    Point{9.74358974358974, 0},
    Point{10, 0},
}};

} // namespace focal::testing
