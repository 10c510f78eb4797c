// Computed with mpmath at 40 significant digits: w(z) = exp(-z^2) erfc(-iz).
pub(super) const FADDEEVA_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.0, 1.0, 0.0),
    (0.0, 1e-12, 0.99999999999887162, 0.0),
    (0.0, 0.05, 0.94599004355496148, 0.0),
    (0.0, 0.5, 0.61569034419292587, 0.0),
    (0.0, 1.5, 0.3215854164543175, 0.0),
    (0.0, 3.0, 0.17900115118138995, 0.0),
    (0.0, 6.9, 0.080933623309744133, 0.0),
    (0.0, 7.1, 0.078697515341626772, 0.0),
    (0.0, 12.0, 0.046854221014893763, 0.0),
    (0.0, 25.0, 0.022549572432641359, 0.0),
    (0.0, -0.5, 1.9523604891825571, 0.0),
    (0.0, -2.0, 108.94090438997797, 0.0),
    (0.0, -4.0, 17772220.904016288, 0.0),
    (0.001, 0.0, 0.9999990000005, 0.0011283784148430354),
    (0.001, 1e-12, 0.99999899999937162, 0.0011283784148410354),
    (0.001, 0.05, 0.94598914925435673, 0.0010337795033635309),
    (0.001, 0.5, 0.6156899848471173, 0.00051268860089207966),
    (0.001, 1.5, 0.32158534030329102, 0.00016362288480165992),
    (0.001, 3.0, 0.17900113529702001, 5.4372255527742178e-5),
    (0.001, 6.9, 0.08093362169276226, 1.149516519571663e-5),
    (0.001, 7.1, 0.078697513852701093, 1.0874449042361317e-5),
    (0.001, 12.0, 0.046854220695025607, 3.8778627117657111e-6),
    (0.001, 25.0, 0.022549572396705512, 9.0054546201175987e-7),
    (0.001, -0.5, 1.9523569964547907, 0.0030807364382099905),
    (0.001, -2.0, 108.93992166717305, 0.43689039516812743),
    (0.001, -4.0, 17771634.424332655, 142176.10962631961),
    (-0.001, 0.0, 0.9999990000005, -0.0011283784148430354),
    (-0.001, 1e-12, 0.99999899999937162, -0.0011283784148410354),
    (-0.001, 0.05, 0.94598914925435673, -0.0010337795033635309),
    (-0.001, 0.5, 0.6156899848471173, -0.00051268860089207966),
    (-0.001, 1.5, 0.32158534030329102, -0.00016362288480165992),
    (-0.001, 3.0, 0.17900113529702001, -5.4372255527742178e-5),
    (-0.001, 6.9, 0.08093362169276226, -1.149516519571663e-5),
    (-0.001, 7.1, 0.078697513852701093, -1.0874449042361317e-5),
    (-0.001, 12.0, 0.046854220695025607, -3.8778627117657111e-6),
    (-0.001, 25.0, 0.022549572396705512, -9.0054546201175987e-7),
    (-0.001, -0.5, 1.9523569964547907, -0.0030807364382099905),
    (-0.001, -2.0, 108.93992166717305, -0.43689039516812743),
    (-0.001, -4.0, 17771634.424332655, -142176.10962631961),
    (0.3, 0.0, 0.91393118527122819, 0.31891568277156586),
    (0.3, 1e-12, 0.91393118527029116, 0.3189156827710175),
    (0.3, 0.05, 0.86889198198912349, 0.29293565136562408),
    (0.3, 0.5, 0.58433297345963116, 0.14796481889063866),
    (0.3, 1.5, 0.31483881885416351, 0.048210102207299863),
    (0.3, 3.0, 0.17758140381831553, 0.01619151642349221),
    (0.3, 6.9, 0.080788346535685804, 0.0034424761312705259),
    (0.3, 7.1, 0.078563731847145791, 0.0032568881888580252),
    (0.3, 12.0, 0.046825450323437867, 0.0011626492416665596),
    (0.3, 25.0, 0.022546338668796173, 0.00027012495714969473),
    (0.3, -0.5, 1.6578625374284648, 0.84155716912029537),
    (0.3, -2.0, 35.910867305370005, 93.047173088223205),
    (0.3, -4.0, -11977181.744435002, 10971269.512707086),
    (-0.3, 0.0, 0.91393118527122819, -0.31891568277156586),
    (-0.3, 1e-12, 0.91393118527029116, -0.3189156827710175),
    (-0.3, 0.05, 0.86889198198912349, -0.29293565136562408),
    (-0.3, 0.5, 0.58433297345963116, -0.14796481889063866),
    (-0.3, 1.5, 0.31483881885416351, -0.048210102207299863),
    (-0.3, 3.0, 0.17758140381831553, -0.01619151642349221),
    (-0.3, 6.9, 0.080788346535685804, -0.0034424761312705259),
    (-0.3, 7.1, 0.078563731847145791, -0.0032568881888580252),
    (-0.3, 12.0, 0.046825450323437867, -0.0011626492416665596),
    (-0.3, 25.0, 0.022546338668796173, -0.00027012495714969473),
    (-0.3, -0.5, 1.6578625374284648, -0.84155716912029537),
    (-0.3, -2.0, 35.910867305370005, -93.047173088223205),
    (-0.3, -4.0, -11977181.744435002, -10971269.512707086),
    (1.0, 0.0, 0.36787944117144232, 0.60715770584139373),
    (1.0, 1e-12, 0.36787944117152826, 0.60715770584065797),
    (1.0, 0.05, 0.37130529167153695, 0.5716425296909678),
    (1.0, 0.5, 0.35490033286757788, 0.34287171913110072),
    (1.0, 1.5, 0.25712793927122836, 0.13524227699550783),
    (1.0, 3.0, 0.1642611363929862, 0.050197135135248591),
    (1.0, 6.9, 0.079347187221251965, 0.011274020213376184),
    (1.0, 7.1, 0.077235299320959662, 0.010675961878966568),
    (1.0, 12.0, 0.04653649334221889, 0.0038517410012877503),
    (1.0, 25.0, 0.022513693583265217, 0.00089911486563682045),
    (1.0, -0.5, 0.15554114245433108, 1.1378372157816864),
    (1.0, -2.0, -26.476058778199207, -30.308571116743307),
    (1.0, -4.0, -951284.40631943404, 6468458.6223996247),
    (-1.0, 0.0, 0.36787944117144232, -0.60715770584139373),
    (-1.0, 1e-12, 0.36787944117152826, -0.60715770584065797),
    (-1.0, 0.05, 0.37130529167153695, -0.5716425296909678),
    (-1.0, 0.5, 0.35490033286757788, -0.34287171913110072),
    (-1.0, 1.5, 0.25712793927122836, -0.13524227699550783),
    (-1.0, 3.0, 0.1642611363929862, -0.050197135135248591),
    (-1.0, 6.9, 0.079347187221251965, -0.011274020213376184),
    (-1.0, 7.1, 0.077235299320959662, -0.010675961878966568),
    (-1.0, 12.0, 0.04653649334221889, -0.0038517410012877503),
    (-1.0, 25.0, 0.022513693583265217, -0.00089911486563682045),
    (-1.0, -0.5, 0.15554114245433108, -1.1378372157816864),
    (-1.0, -2.0, -26.476058778199207, 30.308571116743307),
    (-1.0, -4.0, -951284.40631943404, -6468458.6223996247),
    (2.5, 0.0, 0.0019304541362277092, 0.25172302461185758),
    (2.5, 1e-12, 0.0019304541363579452, 0.25172302461184793),
    (2.5, 0.05, 0.0083823829090677552, 0.2510596127384787),
    (2.5, 0.5, 0.058437472643329446, 0.2324204360851363),
    (2.5, 1.5, 0.11123345956255827, 0.16323674719804184),
    (2.5, 3.0, 0.11287798255948908, 0.088283064985171053),
    (2.5, 6.9, 0.071916080109778595, 0.025590298100651981),
    (2.5, 7.1, 0.070347726273970142, 0.024348393483067734),
    (2.5, 12.0, 0.044935854070247271, 0.0093002767643983866),
    (2.5, 25.0, 0.022327181513434405, 0.0022291948803120741),
    (2.5, -0.5, -0.062409145605048083, 0.23538736434488003),
    (2.5, -2.0, -0.29411355104432365, 0.018041083813491347),
    (2.5, -4.0, 14000.564568795909, 31321.804234933408),
    (-2.5, 0.0, 0.0019304541362277092, -0.25172302461185758),
    (-2.5, 1e-12, 0.0019304541363579452, -0.25172302461184793),
    (-2.5, 0.05, 0.0083823829090677552, -0.2510596127384787),
    (-2.5, 0.5, 0.058437472643329446, -0.2324204360851363),
    (-2.5, 1.5, 0.11123345956255827, -0.16323674719804184),
    (-2.5, 3.0, 0.11287798255948908, -0.088283064985171053),
    (-2.5, 6.9, 0.071916080109778595, -0.025590298100651981),
    (-2.5, 7.1, 0.070347726273970142, -0.024348393483067734),
    (-2.5, 12.0, 0.044935854070247271, -0.0093002767643983866),
    (-2.5, 25.0, 0.022327181513434405, -0.0022291948803120741),
    (-2.5, -0.5, -0.062409145605048083, -0.23538736434488003),
    (-2.5, -2.0, -0.29411355104432365, -0.018041083813491347),
    (-2.5, -4.0, 14000.564568795909, -31321.804234933408),
    (4.0, 0.0, 1.1253517471925911e-7, 0.14595358990015278),
    (4.0, 1e-12, 1.1253521396881122e-7, 0.14595358990015278),
    (4.0, 0.05, 0.0019621708870094351, 0.14592594097867062),
    (4.0, 0.5, 0.019224945518739331, 0.14325607669455359),
    (4.0, 1.5, 0.049867846947185585, 0.12526753205454302),
    (4.0, 3.0, 0.06979096164964831, 0.089340000240364915),
    (4.0, 6.9, 0.061191603050106989, 0.034928701194286334),
    (4.0, 7.1, 0.060292460012860847, 0.033467804672070065),
    (4.0, 12.0, 0.042234842458695615, 0.013991428625585463),
    (4.0, 25.0, 0.021988852098077107, 0.0035127481417635391),
    (4.0, -0.5, -0.01922513441916336, 0.1432558579816224),
    (4.0, -2.0, -0.059698697736864469, 0.11320651824625856),
    (4.0, -4.0, 1.5968762875866552, 1.1722278810971526),
    (-4.0, 0.0, 1.1253517471925911e-7, -0.14595358990015278),
    (-4.0, 1e-12, 1.1253521396881122e-7, -0.14595358990015278),
    (-4.0, 0.05, 0.0019621708870094351, -0.14592594097867062),
    (-4.0, 0.5, 0.019224945518739331, -0.14325607669455359),
    (-4.0, 1.5, 0.049867846947185585, -0.12526753205454302),
    (-4.0, 3.0, 0.06979096164964831, -0.089340000240364915),
    (-4.0, 6.9, 0.061191603050106989, -0.034928701194286334),
    (-4.0, 7.1, 0.060292460012860847, -0.033467804672070065),
    (-4.0, 12.0, 0.042234842458695615, -0.013991428625585463),
    (-4.0, 25.0, 0.021988852098077107, -0.0035127481417635391),
    (-4.0, -0.5, -0.01922513441916336, -0.1432558579816224),
    (-4.0, -2.0, -0.059698697736864469, -0.11320651824625856),
    (-4.0, -4.0, 1.5968762875866552, -1.1722278810971526),
    (5.9, 0.0, 7.6244599053897078e-16, 0.097062817120685096),
    (5.9, 1e-12, 1.7724520919110599e-14, 0.097062817120685096),
    (5.9, 0.05, 0.00084803565795594205, 0.097055284185198631),
    (5.9, 0.5, 0.0084135263720595633, 0.096315674615055487),
    (5.9, 1.5, 0.023736540061112506, 0.090752618508208988),
    (5.9, 3.0, 0.039617981889000317, 0.076109987972499617),
    (5.9, 6.9, 0.047423730944024598, 0.040063715850240152),
    (5.9, 7.1, 0.047173582228825991, 0.038745387469995255),
    (5.9, 12.0, 0.037838890934376572, 0.018501071618005357),
    (5.9, 25.0, 0.021364205909488955, 0.0050343374592464412),
    (5.9, -0.5, -0.0084135263720577473, 0.096315674615054755),
    (5.9, -2.0, -0.030090970736551106, 0.086414004263249475),
    (5.9, -4.0, -0.04517903110077361, 0.065322480994991671),
    (-5.9, 0.0, 7.6244599053897078e-16, -0.097062817120685096),
    (-5.9, 1e-12, 1.7724520919110599e-14, -0.097062817120685096),
    (-5.9, 0.05, 0.00084803565795594205, -0.097055284185198631),
    (-5.9, 0.5, 0.0084135263720595633, -0.096315674615055487),
    (-5.9, 1.5, 0.023736540061112506, -0.090752618508208988),
    (-5.9, 3.0, 0.039617981889000317, -0.076109987972499617),
    (-5.9, 6.9, 0.047423730944024598, -0.040063715850240152),
    (-5.9, 7.1, 0.047173582228825991, -0.038745387469995255),
    (-5.9, 12.0, 0.037838890934376572, -0.018501071618005357),
    (-5.9, 25.0, 0.021364205909488955, -0.0050343374592464412),
    (-5.9, -0.5, -0.0084135263720577473, -0.096315674615054755),
    (-5.9, -2.0, -0.030090970736551106, -0.086414004263249475),
    (-5.9, -4.0, -0.04517903110077361, -0.065322480994991671),
    (6.1, 0.0, 6.9167539755414788e-17, 0.093786735791049),
    (6.1, 1e-12, 1.5888177095040568e-14, 0.093786735791049),
    (6.1, 0.05, 0.00079089154515814817, 0.093779963256384175),
    (6.1, 0.5, 0.007851033481461682, 0.093114603569003993),
    (6.1, 1.5, 0.022243256122025279, 0.088084363970699956),
    (6.1, 3.0, 0.037529780676707608, 0.074633755623639692),
    (6.1, 6.9, 0.046094587271576194, 0.04027422697968819),
    (6.1, 7.1, 0.045894093678816592, 0.038984363825618124),
    (6.1, 12.0, 0.037342410915355313, 0.018878602863112498),
    (6.1, 25.0, 0.02128704276629532, 0.0051862217695975203),
    (6.1, -0.5, -0.0078510334814615073, 0.09311460356900396),
    (6.1, -2.0, -0.028289595371470454, 0.084130358197760215),
    (6.1, -4.0, -0.043132596495877165, 0.064535059073689988),
    (-6.1, 0.0, 6.9167539755414788e-17, -0.093786735791049),
    (-6.1, 1e-12, 1.5888177095040568e-14, -0.093786735791049),
    (-6.1, 0.05, 0.00079089154515814817, -0.093779963256384175),
    (-6.1, 0.5, 0.007851033481461682, -0.093114603569003993),
    (-6.1, 1.5, 0.022243256122025279, -0.088084363970699956),
    (-6.1, 3.0, 0.037529780676707608, -0.074633755623639692),
    (-6.1, 6.9, 0.046094587271576194, -0.04027422697968819),
    (-6.1, 7.1, 0.045894093678816592, -0.038984363825618124),
    (-6.1, 12.0, 0.037342410915355313, -0.018878602863112498),
    (-6.1, 25.0, 0.02128704276629532, -0.0051862217695975203),
    (-6.1, -0.5, -0.0078510334814615073, -0.09311460356900396),
    (-6.1, -2.0, -0.028289595371470454, -0.084130358197760215),
    (-6.1, -4.0, -0.043132596495877165, -0.064535059073689988),
    (7.0, 0.0, 5.2428856633634639e-22, 0.081447508065002968),
    (7.0, 1e-12, 1.1885946338817538e-14, 0.081447508065002968),
    (7.0, 0.05, 0.00059426455573203193, 0.081443123030749759),
    (7.0, 0.5, 0.0059104241310586737, 0.081011438857947808),
    (7.0, 1.5, 0.016988628366453168, 0.077690984494493208),
    (7.0, 3.0, 0.029795821949883397, 0.068306545603570443),
    (7.0, 6.9, 0.04050640309396151, 0.04067029831063994),
    (7.0, 7.1, 0.040488912699989114, 0.039519333880881962),
    (7.0, 12.0, 0.035079849599619446, 0.020358031907183253),
    (7.0, 25.0, 0.020915910812690115, 0.0058477942865265762),
    (7.0, -0.5, -0.0059104241310586737, 0.081011438857947808),
    (7.0, -2.0, -0.021853396687438291, 0.075009635935424815),
    (7.0, -4.0, -0.035263808418037586, 0.060755031098876713),
    (-7.0, 0.0, 5.2428856633634639e-22, -0.081447508065002968),
    (-7.0, 1e-12, 1.1885946338817538e-14, -0.081447508065002968),
    (-7.0, 0.05, 0.00059426455573203193, -0.081443123030749759),
    (-7.0, 0.5, 0.0059104241310586737, -0.081011438857947808),
    (-7.0, 1.5, 0.016988628366453168, -0.077690984494493208),
    (-7.0, 3.0, 0.029795821949883397, -0.068306545603570443),
    (-7.0, 6.9, 0.04050640309396151, -0.04067029831063994),
    (-7.0, 7.1, 0.040488912699989114, -0.039519333880881962),
    (-7.0, 12.0, 0.035079849599619446, -0.020358031907183253),
    (-7.0, 25.0, 0.020915910812690115, -0.0058477942865265762),
    (-7.0, -0.5, -0.0059104241310586737, -0.081011438857947808),
    (-7.0, -2.0, -0.021853396687438291, -0.075009635935424815),
    (-7.0, -4.0, -0.035263808418037586, -0.060755031098876713),
    (9.0, 0.0, 6.6396771995807344e-36, 0.063082090059258286),
    (9.0, 1e-12, 7.0984539711365806e-15, 0.063082090059258286),
    (9.0, 0.05, 0.00035491124000717249, 0.063080080135826348),
    (9.0, 0.5, 0.003537805942126848, 0.062881746660773949),
    (9.0, 1.5, 0.010347252585414017, 0.061324811185921078),
    (9.0, 3.0, 0.019083588990414826, 0.05660671018406751),
    (9.0, 6.9, 0.030447541291100111, 0.039405392027300657),
    (9.0, 7.1, 0.030652329973088026, 0.038559512007512501),
    (9.0, 12.0, 0.030118978306412714, 0.022489312804382541),
    (9.0, 25.0, 0.019970724085855653, 0.0071793066430514922),
    (9.0, -0.5, -0.003537805942126848, 0.062881746660773949),
    (9.0, -2.0, -0.013500451659066343, 0.060025896627129679),
    (9.0, -4.0, -0.023550184500415048, 0.0524368971687278),
    (-9.0, 0.0, 6.6396771995807344e-36, -0.063082090059258286),
    (-9.0, 1e-12, 7.0984539711365806e-15, -0.063082090059258286),
    (-9.0, 0.05, 0.00035491124000717249, -0.063080080135826348),
    (-9.0, 0.5, 0.003537805942126848, -0.062881746660773949),
    (-9.0, 1.5, 0.010347252585414017, -0.061324811185921078),
    (-9.0, 3.0, 0.019083588990414826, -0.05660671018406751),
    (-9.0, 6.9, 0.030447541291100111, -0.039405392027300657),
    (-9.0, 7.1, 0.030652329973088026, -0.038559512007512501),
    (-9.0, 12.0, 0.030118978306412714, -0.022489312804382541),
    (-9.0, 25.0, 0.019970724085855653, -0.0071793066430514922),
    (-9.0, -0.5, -0.003537805942126848, -0.062881746660773949),
    (-9.0, -2.0, -0.013500451659066343, -0.060025896627129679),
    (-9.0, -4.0, -0.023550184500415048, -0.0524368971687278),
    (12.0, 0.0, 2.8946403116483003e-63, 0.047180778707018842),
    (12.0, 1e-12, 3.959521872939645e-15, 0.047180778707018842),
    (12.0, 0.05, 0.00019797257009844099, 0.047179945012544806),
    (12.0, 0.5, 0.0019762436764948046, 0.04709755696226781),
    (12.0, 1.5, 0.005845666600765666, 0.046442352177781985),
    (12.0, 3.0, 0.011163889644607903, 0.044361237994963508),
    (12.0, 6.9, 0.020423604791223385, 0.035333456554510462),
    (12.0, 7.1, 0.020709002104185815, 0.034820670921058998),
    (12.0, 12.0, 0.023548497253087118, 0.023466876292339721),
    (12.0, 25.0, 0.018338655043723624, 0.0087911336830888245),
    (12.0, -0.5, -0.0019762436764948046, 0.04709755696226781),
    (12.0, -2.0, -0.0076998635242142488, 0.04588402563490717),
    (12.0, -4.0, -0.014220662349140316, 0.042393495032666248),
    (-12.0, 0.0, 2.8946403116483003e-63, -0.047180778707018842),
    (-12.0, 1e-12, 3.959521872939645e-15, -0.047180778707018842),
    (-12.0, 0.05, 0.00019797257009844099, -0.047179945012544806),
    (-12.0, 0.5, 0.0019762436764948046, -0.04709755696226781),
    (-12.0, 1.5, 0.005845666600765666, -0.046442352177781985),
    (-12.0, 3.0, 0.011163889644607903, -0.044361237994963508),
    (-12.0, 6.9, 0.020423604791223385, -0.035333456554510462),
    (-12.0, 7.1, 0.020709002104185815, -0.034820670921058998),
    (-12.0, 12.0, 0.023548497253087118, -0.023466876292339721),
    (-12.0, 25.0, 0.018338655043723624, -0.0087911336830888245),
    (-12.0, -0.5, -0.0019762436764948046, -0.04709755696226781),
    (-12.0, -2.0, -0.0076998635242142488, -0.04588402563490717),
    (-12.0, -4.0, -0.014220662349140316, -0.042393495032666248),
    (20.0, 0.0, 1.9151695967140057e-174, 0.028244874092056703),
    (20.0, 1e-12, 1.4157965867555475e-15, 0.028244874092056703),
    (20.0, 0.05, 7.0789382984412057e-5, 0.028244696449072023),
    (20.0, 0.5, 0.00070745221988472956, 0.028227120903787739),
    (20.0, 1.5, 0.002111711611173728, 0.028085898823060252),
    (20.0, 3.0, 0.0041531271981806325, 0.027619583484586805),
    (20.0, 6.9, 0.0087222097900275319, 0.025225149701712773),
    (20.0, 7.1, 0.0089188509818227493, 0.025067613866806029),
    (20.0, 12.0, 0.012467589003675926, 0.020741086951516463),
    (20.0, -0.5, -0.00070745221988472956, 0.028227120903787739),
    (20.0, -2.0, -0.0028033131249322087, 0.027963489374117211),
    (20.0, -4.0, -0.0054435583923514672, 0.027152151360306487),
    (-20.0, 0.0, 1.9151695967140057e-174, -0.028244874092056703),
    (-20.0, 1e-12, 1.4157965867555475e-15, -0.028244874092056703),
    (-20.0, 0.05, 7.0789382984412057e-5, -0.028244696449072023),
    (-20.0, 0.5, 0.00070745221988472956, -0.028227120903787739),
    (-20.0, 1.5, 0.002111711611173728, -0.028085898823060252),
    (-20.0, 3.0, 0.0041531271981806325, -0.027619583484586805),
    (-20.0, 6.9, 0.0087222097900275319, -0.025225149701712773),
    (-20.0, 7.1, 0.0089188509818227493, -0.025067613866806029),
    (-20.0, 12.0, 0.012467589003675926, -0.020741086951516463),
    (-20.0, -0.5, -0.00070745221988472956, -0.028227120903787739),
    (-20.0, -2.0, -0.0028033131249322087, -0.027963489374117211),
    (-20.0, -4.0, -0.0054435583923514672, -0.027152151360306487),
    (29.0, 0.0, 5.7324558603257853e-366, 0.019466400393582409),
    (29.0, 1e-12, 6.7205573226714239e-16, 0.019466400393582409),
    (29.0, 0.05, 3.3602686306114788e-5, 0.019466342354150458),
    (29.0, 0.5, 0.00033592758859676944, 0.019460598167137049),
    (29.0, 1.5, 0.0010053825686845194, 0.019414304874737196),
    (29.0, 3.0, 0.0019947316685329197, 0.01925968188927406),
    (29.0, 6.9, 0.0043877795334973051, 0.01842060904740178),
    (29.0, 7.1, 0.0045007272078190134, 0.018362599751986674),
    (29.0, -0.5, -0.00033592758859676944, 0.019460598167137049),
    (29.0, -2.0, -0.0013377223700498884, 0.019373978968068869),
    (29.0, -4.0, -0.0026378304644214004, 0.019101918244403169),
    (-29.0, 0.0, 5.7324558603257853e-366, -0.019466400393582409),
    (-29.0, 1e-12, 6.7205573226714239e-16, -0.019466400393582409),
    (-29.0, 0.05, 3.3602686306114788e-5, -0.019466342354150458),
    (-29.0, 0.5, 0.00033592758859676944, -0.019460598167137049),
    (-29.0, 1.5, 0.0010053825686845194, -0.019414304874737196),
    (-29.0, 3.0, 0.0019947316685329197, -0.01925968188927406),
    (-29.0, 6.9, 0.0043877795334973051, -0.01842060904740178),
    (-29.0, 7.1, 0.0045007272078190134, -0.018362599751986674),
    (-29.0, -0.5, -0.00033592758859676944, -0.019460598167137049),
    (-29.0, -2.0, -0.0013377223700498884, -0.019373978968068869),
    (-29.0, -4.0, -0.0026378304644214004, -0.019101918244403169),
];
pub(super) const FADDEEVA_RANDOM: &[(f64, f64, f64, f64)] = &[
    (-6.9830165215099615, 4.509344730398538, 0.03730802967487571, -0.056934251334510717),
    (2.152920258401352, 9.067734258115323, 0.058634937324804758, 0.013765285894279693),
    (0.446143991365215, -1.762643271414499, -0.34558056183718307, 36.691213600462852),
    (-8.602891528507621, -1.0928698665613494, -0.0083642302455096903, -0.064948838252341242),
    (6.537042493440762, -0.7619803885035441, -0.010283297628668329, 0.08610996617956985),
    (7.645993344335359, 28.274395101081186, 0.018586445373051006, 0.0050203237042916769),
    (-2.066390506984397, 7.762551055929201, 0.067488188812760276, -0.017696165115856731),
    (21.50810754292077, 6.5571064489453175, 0.0073363548612125603, 0.02401643182637078),
    (-22.932465715297898, 7.1799001953638335, 0.0070311418829129528, -0.02241836662688362),
    (-0.0006385472401521251, 4.65280130929973, 0.11863209762215807, -1.5603533773059397e-5),
    (-7.400942521907588, 2.4805631461623074e-07, 2.6284485329967054e-9, -0.076947992798947759),
    (-26.42392980202604, 3.7966375230377754, 0.0030119407669651694, -0.020933104026992429),
    (-4.1996462711746325, 1.7417539338510514e-10, 2.1900665647523568e-8, -0.1385331980060631),
    (-0.9363124725844933, 0.9976699686368233, 0.31726095007506563, -0.20165914730055891),
    (11.541677156315131, 1.9737988642983355e-11, 8.4556369077796311e-14, 0.049068393278655296),
    (0.5039300762290289, 6.751374955734288, 0.082243556392305837, 0.0060115364231899536),
    (-12.299609636369183, 0.17074989337184482, 0.00064309372595999892, -0.046014645533122345),
    (-4.912630692886367, 21.98565067565323, 0.02442192710000446, -0.0054463056524776927),
    (-0.6622139714516635, -1.706160517434557, -15.334273745503866, -18.381160867014805),
    (15.34511024034316, 5.443148635887707e-07, 1.3125704295888087e-9, 0.036845306646927769),
    (-0.0003725049743038064, 5.562362930189274, 0.099864378605002174, -6.4872960132183658e-6),
    (1.5979040856498443, 2.5620533130141308, 0.15833677793347291, 0.089450823397424563),
    (0.0008893621902158748, 3.7927866993571557, 0.1440459624413694, 3.1757249859949681e-5),
    (-25.48117319936126, 2.9521762877753848e-05, 2.571192207710784e-8, -0.02215851888604005),
    (28.599564489064775, 0.0012473393382780953, 8.6196374644190452e-7, 0.019739290213219784),
    (-6.85251345319735, 19.06553962417821, 0.026189349631065569, -0.0093901250650558935),
    (-2.2982828220140483, 2.54559650391597, 0.12543877118111546, -0.10432080156654097),
    (-15.143109978185143, 9.901340203396494, 0.017112022667660067, -0.026091107256637285),
    (-0.0008388373975997227, 3.5934992075946477, 0.15152099141845777, -3.3048507314270453e-5),
    (7.667676528830249, 6.192798378357413, 0.036228078783013721, 0.044394928446922483),
    (-0.0004431578709722057, 3.3223721376935886, 0.16298590797644844, -2.0110269988736666e-5),
    (7.683856543964339, 7.577312039639912, 0.036869070759470771, 0.037067812634427582),
    (-19.426936290577782, 4.65457660504468, 0.0066035105358996851, -0.027491969180487155),
    (-0.9022361795186029, 16.441075623164437, 0.034150821441181692, -0.0018672433706503166),
    (1.3268244741278394, 7.530979255250953, 0.072124148407815876, 0.012498058197875675),
    (0.8985031181051468, 2.1752146373517592e-06, 0.44605723327740854, 0.61009379246448706),
    (-25.86841219302017, 0.0139218078655903, 1.1764056093250682e-5, -0.021826307696236927),
    (21.72176467979964, 0.0005905914238437419, 7.0844771329676819e-7, 0.026001080927191206),
    (-2.0204233535945404, -0.9646290628967573, -0.19857228936216714, -0.16672134309515711),
    (-25.38962634611612, 8.11321180468884e-14, 7.1173541780442689e-17, -0.02223853960123983),
    (-20.261808733674158, 8.221770523667333, 0.0097262305930323503, -0.023919185412533739),
    (-8.18340467792574, -2.158470740017192, -0.017336631062549377, -0.0647942234621449),
    (0.00022813797557695754, 1.1884038826471315, 0.38110277943390405, 5.0776921139387197e-5),
    (-9.156627236777908, 9.01739350443332, 0.030899383028946616, -0.03118706686192973),
    (-0.32330687167461036, -1.1411533844383441, 4.5226630342755311, -4.5304308999899875),
    (-9.44184970541989, 5.736977426666943, 0.026727031379291425, -0.043625460018673788),
    (-0.0006771227789471371, 0.18476576836198522, 0.82143129716007938, -0.00055851393754884927),
    (5.651479008424946e-05, 1.1728203111927256, 0.3845997669574017, 1.2786263806754879e-5),
    (-9.45915017155663, 3.2810944093830647, 0.018708098947954648, -0.053390164576102474),
    (0.0007266500605793379, 5.569574287262415, 0.099738944811050002, 1.262352788846263e-5),
    (-7.99801249432927, 2.5123871396330983, 0.020558143313346206, -0.064498671037957097),
    (1.890359054586984, 0.0003290341939058656, 0.028143828189226368, 0.36688672426362582),
    (-5.539166537936298, 6.115112467735949, 0.050968316075674446, -0.045497031921980063),
    (0.000705257597493321, 6.44862867828534, 0.086473745518579218, 9.2424035015376983e-6),
    (0.00047974604075142835, 1.8139159202526791, 0.27682288202068211, 5.9542362322218145e-5),
    (-2.888749132900836, -1.710198492586346, -0.10127793861953368, -0.13944556549920698),
    (-13.234887657058213, 5.552753987835967, 0.015297420000436299, -0.036283343794696849),
    (26.477874427797595, 1.0903693870523605e-08, 8.7935453526594221e-12, 0.02132319276894816),
    (0.0009760761164057203, 7.640005050570665, 0.073229774805854052, 9.2019094521656446e-6),
    (-5.590753540075251, 0.2684582673072793, 0.0050860515621256819, -0.10235605965238614),
    (-17.737598203426618, 17.594191115448, 0.015916168124616572, -0.016020210806464681),
    (0.0006808710545585797, 3.8357874100923057, 0.14252626801100014, 2.3815649083207618e-5),
    (17.379337201280286, 1.3947923832054233e-13, 2.6184099469758308e-16, 0.032517248206207283),
    (23.767073977999928, 0.0003639895666984217, 3.6451836067168981e-7, 0.023759353394688584),
    (-1.2741008135479852, 2.570651462603335e-12, 0.19724022377802497, -0.55284229670509547),
    (-9.714002407852625, 0.0006473187399969862, 3.9335366940825158e-6, -0.05839281150810383),
    (-0.00020832300986110375, 3.211094542941612, 0.16819144885894209, -1.0045726353566721e-5),
    (0.0004495973312684306, 1.3600292797751639, 0.34607548354203365, 8.4089774604915306e-5),
    (-0.0007076513825122517, 6.6120838282030965, 0.084382907747160968, -8.8353356735353902e-6),
    (0.0003145365854720398, 2.803260097260023, 0.19034921673867119, 1.9244112131610801e-5),
    (-7.380322959810992, -1.8575706184389444, -0.018542147577775213, -0.072368961827662617),
    (0.00029934933934766127, 4.212648376792444, 0.13043529704652119, 8.8077787555661503e-6),
    (-0.00013238112648502871, 6.973943423915233, 0.080092382273465399, -1.4905693056049903e-6),
    (-0.0005779153253437024, 2.0146784909236306, 0.25383700977502345, -6.1015825639001812e-5),
    (-15.567636446499925, 16.352426549476736, 0.018114649045065189, -0.017211495267653607),
    (-4.859246834727383, 1.32543132461495, 0.031198954799901975, -0.10963165302834472),
    (-0.0002924319520934822, 3.665287891773869, 0.14874302876942658, -1.1114495217866892e-5),
    (8.085935490840797, 2.2062827070906517, 0.018072706801482735, 0.065275874642719104),
    (3.2978822404629553e-06, 4.25459969948747, 0.12921227339250341, 9.5263180452907554e-8),
    (-9.6259026418916, 2.401249123849434, 0.013962167053897539, -0.055394052263309906),
    (-1.5904240522826214, 20.93137792476347, 0.02676991085930118, -0.0020294616824754584),
    (-3.4803569790227185, 3.183487127030368, 0.082756335417069089, -0.086488653293439901),
    (5.68544950730951, -0.9389058289507173, -0.016701528580789629, 0.097947201255271181),
    (-5.030113579138201, 0.7691707046478156, 0.017798226896404434, -0.11161871203934916),
    (0.4474115239545924, 3.831304942433877e-07, 0.81858551122497235, 0.44257596221078659),
    (23.924306107129098, 9.63503537034756e-09, 9.5222881427576443e-12, 0.023602930430697404),
    (0.32208158937085685, 8.206913912851632e-08, 0.90146268164570648, 0.33930882776656854),
    (-2.7639440486352385, 1.5825353042180176e-07, 0.00048113895907078331, -0.22187316859631845),
    (8.830022550770014, 4.992178821802858, 0.027646198067310345, 0.048422145388430643),
    (0.0008843611766071514, 2.0767383529415255, 0.2474396260033567, 8.9005919245852284e-5),
    (8.865340680269675, 6.3999978339320585, 0.030408114937148141, 0.041768979783716678),
    (-22.70268273694916, 11.589896913076439, 0.010080765881014261, -0.019716122722196458),
    (-15.561674492803807, -0.5870146899017472, -0.0013741828454867344, -0.036278231321296111),
    (16.468288996043, 0.0128782497702171, 2.6940298332146381e-5, 0.034322642541139317),
    (12.967192967291773, 18.788465001315238, 0.020345552059589738, 0.014014963144489396),
    (27.150247735139175, 10.142476865669973, 0.0068223894151441677, 0.018240986864362111),
    (9.797429094885729, 6.324446694829476, 0.026415361512079762, 0.040619392157054635),
    (-4.108690920141665, 14.014966907543847, 0.037010912268174398, -0.010799931553810049),
    (-6.085106677321377, 1.1852556833769397, 0.018086285129989509, -0.090346688162134732),
    (-27.869990172961195, 3.01771586032582e-07, 2.1961923096187294e-10, -0.020256679792888033),
    (-9.638360383459247, 1.3149788914199063, 0.0079646247284052586, -0.05775150223540552),
    (0.7112124988804212, 7.377779987002263e-14, 0.60300896287239288, 0.5795511524608482),
    (0.0005767261121951616, 7.773567669176593, 0.071991741237717246, 5.256176165631184e-6),
    (-14.066143659388814, -1.6935897328357674, -0.0047956013867502998, -0.039630082849095764),
    (-13.314126343764071, 5.610480414350451e-13, 1.800991555006208e-15, -0.042495811839704689),
    (8.22827632367218, 6.189789797812816, 0.03318091642345965, 0.043692240374195782),
    (4.008348930932357, -1.105377921531923, -0.039292624741377383, 0.13356994307262543),
    (11.292334280912883, 11.035462346258846, 0.025026579857246306, 0.025506589197498517),
    (-0.000832514947530964, 6.849829090977191, 0.081514443855590169, -9.7064029485665742e-6),
    (21.76649814323077, 11.974526192106522, 0.010964978103213092, 0.019899084062543847),
    (1.0612823691607005, 7.266692840712272, 0.075387467526258639, 0.010814603745604444),
    (-22.24651200628027, 14.388195875396665, 0.011579831428421078, -0.017878800798948762),
    (-23.43291209524297, 2.3278200227211743, 0.002374762594800819, -0.023862233277785599),
    (-17.893905073889997, 7.295749334589736, 0.011058954843395744, -0.027050906214850013),
    (5.189965099971225, 0.8996083472435821, 0.019333027965762108, 0.10728844456154361),
    (-6.442002315741426, 1.4700102212785886, 0.019637730783590835, -0.084024252581765164),
    (-14.973074628286353, -2.4935781239843506, -0.006144544959099736, -0.03673475694250387),
    (2.960849424652711, 3.611292805408247e-12, 0.00015584801108142625, 0.20428712914116207),
    (8.692856795647078, -0.9371865497290859, -0.0070549091831090809, 0.064564623703442884),
    (-0.00013564482843116772, 3.9600125876609233, 0.13830643572097348, -4.474748332210533e-6),
    (-0.0002138278488768282, 4.053487617241325, 0.13528844449829295, -6.7567665730191991e-6),
    (27.981551344058232, 4.2316763387929084e-10, 3.0551167635185978e-13, 0.020175813644597764),
    (0.0004134508032924559, 5.087815591080117, 0.10886194384557246, 8.5336948396601579e-6),
    (-3.0489563968953597, -1.4561146321156375, -0.081074254740871465, -0.15234788706500697),
    (-20.205208783417454, -0.21199920063828692, -0.00029402683309072888, -0.027954205486477299),
    (0.0007410756424954966, 5.364346383269428, 0.1034343739785327, 1.3831085499039089e-5),
    (-15.467223960450806, 6.67093025515107, 0.013320412225518956, -0.030775532307561775),
    (-6.849341203415886, 2.4582460823374026, 0.026839869068279136, -0.073342346840772089),
    (-5.111070121162129, 7.656667700587851, 0.051036579638727667, -0.033672577220966327),
    (-2.8683216597202588, -1.9893108505507722, -0.087147642859440444, -0.10476395969405879),
    (-0.5071274520562792, 3.0276400637639966, 0.17359598478037246, -0.026576865843276303),
    (0.28413837085875926, -2.836632460369871, -237.45656538163097, 5756.3013882685824),
    (-24.614796127141204, 10.183868619534552, 0.0081108189563441452, -0.01957649382062003),
    (-28.650351181784547, 7.0400704874031685, 0.0045706012396507735, -0.018579169611758453),
    (5.134997050898008, 14.463255093672629, 0.034601152070207966, 0.012233001890526857),
    (9.13753305213502, 4.6335242516078e-05, 3.1889751682633518e-7, 0.062120791094036965),
    (-0.00022096705787910014, 2.609078033010796, 0.20298336705879093, -1.5286561367051513e-5),
    (-0.000701073701915494, 5.7932461868946055, 0.095997055859036152, -1.1294294583405153e-5),
    (-26.46029213188802, 0.0018897694924213187, 1.5260803414252294e-6, -0.021337381766178592),
    (0.0002546642486638531, 5.870816987815695, 0.094763243869564681, 3.9992069337062703e-6),
    (-0.0007213847799615913, 4.190058276228139, 0.13110329068827041, -2.143831579566571e-5),
    (6.698751868740526, 6.046776057487708, 0.042197663771180381, 0.046175801413903668),
    (0.00016812303361247744, 7.142637891244062, 0.07823654299502628, 1.8070827916632301e-6),
    (11.212915847358168, 1.2711585626097833e-11, 5.7735513890590695e-14, 0.050518577975285162),
    (-22.01440812478071, 8.903346722305045, 0.0089271664104657065, -0.022034095710391754),
    (20.14927198799826, 15.431399134365844, 0.01353240896541925, 0.017642266726480427),
    (7.321134618101581, 1.5451348111749525e-05, 1.6742184750295503e-7, 0.077803144361509208),
    (-9.93371345744304, 5.976975520708526, 0.025271442802880334, -0.04168756445579639),
    (0.17232103702231782, 1.67956761504703e-07, 0.97074183282989257, 0.19063947476298428),
    (-25.169079339115186, 8.843871736124743e-05, 7.895216525924807e-8, -0.022433714894954825),
    (-25.533000001549592, 5.763421332448164, 0.0047556547960820789, -0.021037602907527812),
    (-17.09738342923898, 9.720441349144063e-05, 1.8857918620451706e-7, -0.033055326820380458),
    (-1.2102442301344368e-05, 3.06048381785988, 0.17576964393705805, -6.3536448697685319e-7),
    (3.67393125404703, 5.669701058175226, 0.070194802715635309, 0.044518017414231715),
    (8.280252572155199, 1.1113978786186618e-13, 9.3532784232108617e-16, 0.068644943842930465),
    (-14.76358310064628, 21.526169492790586, 0.017828573956737084, -0.012209697031829002),
    (1.3552339573861651, -1.8753078667506056, 3.6871027301260595, -9.8810849846018931),
    (-13.87363405264512, 19.176052095622786, 0.01931905936377763, -0.013952197996854426),
    (10.191044095140917, 8.444276759731128e-11, 4.6551300317028393e-13, 0.05563178414124482),
    (-0.7067429325137127, 2.6633915429688813, 0.18907804538831441, -0.044985200897366835),
    (23.61977557051621, 3.575250985363599, 0.0035436630808860918, 0.023369965764244092),
    (0.0008725086819074328, 0.14003564653330258, 0.85970760124246463, 0.00077443800155859707),
    (6.397953853997365, 7.681082516506995, 0.043499495410691969, 0.035873507999200606),
    (-4.626855196528384, 0.09837219987472601, 0.0027983454067643985, -0.1249492101799213),
    (-0.0005785824049321882, 4.651778941768592, 0.11865708570491427, -1.4144075366135037e-5),
    (1.4439427532891749, 28.44043110955706, 0.019774533219653278, 0.0010027341519914048),
    (19.213020636887045, 13.788563670409768, 0.013930385640306658, 0.019375919880075657),
    (0.0004066740775881487, 1.8510688244037592, 0.27228208633904552, 4.8944596009693283e-5),
    (-2.7718687145702244e-05, 0.19867522472532162, 0.81008679902164115, -2.2354866527684343e-5),
    (-0.4982334308677423, 11.875089916429204, 0.047261887173560958, -0.0019691329561444591),
    (-7.185855594846428, 1.4396014642794537, 0.01554070324110756, -0.076089728763745058),
    (6.804620672959739, -1.9825861808249672, -0.022887140707183429, 0.076950669771324502),
    (19.668426089726793, 4.1740552420787927e-13, 6.1113295165213038e-16, 0.028722259848284842),
    (0.0004260471315938475, 7.212532504791487, 0.077492357537519262, 4.493462906061422e-6),
    (-7.666680038730497, 9.96567960735645, 0.035618238676630236, -0.027229202662358244),
    (0.0001783533107698066, 2.8856745913872413, 0.18543180387260215, 1.0377928629044584e-5),
    (-4.496894947550407, -1.517319032502346, -0.040382361085688908, -0.11409031425728352),
    (20.08055969863154, 6.425565272225402, 0.0081796701466631161, 0.025504667342307273),
    (-0.000501350567176363, 2.1258241198206385, 0.24259041577792832, -4.8615969854722106e-5),
    (-6.203019056739862, 1.7334928501503661, 0.024386525437281294, -0.085094487650225429),
    (0.0007685331110508936, 6.495698139766178, 0.085861221993283555, 9.9309788711497162e-6),
    (23.978585472644333, 0.05005420034435403, 4.9243967020800269e-5, 0.023549304918406387),
    (4.391451639022961, -1.505239655564327, -0.04197757120937193, 0.1164774000272072),
    (-2.8500954682751356, 0.00014488323175301397, 0.00030968634857151786, -0.21377074554387735),
    (-12.39991742250804, 4.5834048221957807e-14, 1.69848524656754e-16, -0.045648888485044859),
    (-0.0007453773592298806, 3.777472699574628, 0.14459482244229233, -2.6813564733498942e-5),
    (-4.0445626891042625, 5.390325049962496, 0.067260338919212734, -0.049383212314626234),
    (-0.00047966189077184706, 5.247962608257831, 0.10565236727953335, -9.3341304660313273e-6),
    (1.146434049140808, 1.9436777770327414, 0.21202166201398863, 0.10633048015753372),
    (-20.30058231569651, 3.859793197512311, 0.0051169280860116373, -0.026849255879419065),
    (-5.848429346285225e-06, 1.760202017604474, 0.28364179215053222, -7.5939198381777853e-7),
    (0.000992950227249382, 3.5996835486544976, 0.15127771779395981, 3.899838866272615e-5),
    (-18.455574254355298, -0.0064212324847434665, -1.0683431873767628e-5, -0.030615216315442599),
    (-8.178113204346936, 0.39126580717454296, 0.0033693823942295352, -0.069350499106541748),
    (4.177064538959492, 26.279298153986755, 0.020926625392773139, 0.0033215813666867792),
    (-5.058663798834406, 3.86748134540785e-09, 9.8533310108658294e-11, -0.11385083022651751),
    (-2.4626837268114325, 1.3820310050331805, 0.11096417471852494, -0.17220952300257259),
    (0.20374485666708253, 17.777687892915996, 0.031681724595397555, 0.00036195519837461424),
    (-0.000568073718360094, 2.16816704850138, 0.23854879781295626, -5.3371564630712107e-5),
    (-6.014571795258654, 11.71332694776811, 0.038097616197038726, -0.0194506505319315),
    (0.0006973673524609052, 6.9831278901124225, 0.079989099478609789, 7.8320863139026085e-6),
    (-5.346344458637749e-05, 4.6974119239940855, 0.117551732673334, -1.2831946036376641e-6),
    (-6.508734257412627, 27.5853000330128, 0.019364450037398056, -0.0045633582605551617),
    (0.0007109253476284653, 7.7779289751619345, 0.071952014661301812, 6.4721497111900364e-6),
    (-23.45724006423336, 2.094486720995989, 0.002136317866132174, -0.023882475525369361),
    (3.641501234306455, 7.414905594691287, 0.061196349988534444, 0.029624363861627301),
    (8.546190940570035, 0.0002112551937169186, 1.6665968079150928e-6, 0.066478048289869826),
    (1.0300182963701499, -1.6045374124224459, -9.2098587774890377, -1.3548354330110793),
    (-15.510543919919638, 0.0262374411904669, 6.1918300456836752e-5, -0.036450553621111873),
    (-11.380628825566, 5.340137639129977e-13, 2.3536639440325264e-15, -0.049768193007450491),
    (8.177465843005706, 20.053203271380465, 0.024112079189396159, 0.0098117496881177027),
    (-25.77888549848678, 14.306410507387184, 0.0092969016544168971, -0.016732909000975992),
    (-2.2383610515472485, 0.23583033610039816, 0.044643657246360527, -0.27958124191414021),
    (-28.39322488625626, 1.176352735611585e-10, 8.2478928804128828e-14, -0.019882917716287709),
    (9.178799437933716, 4.445756393627167, 0.024376893037502911, 0.049841736770940037),
    (-4.939155986491287e-05, 1.878144773662223, 0.26905932476260277, -5.814099681562179e-6),
    (-9.564252317828652, 2.983102447155753, 0.016992904910052812, -0.053932567755336363),
    (-4.6390794165183635, 2.9713762578901195e-11, 4.511630697453057e-10, -0.12466684876069462),
    (24.65932802463059, 1.152423189678771e-11, 1.0718869457103862e-14, 0.022898216887857874),
    (-9.716905779392022, 10.87837591734943, 0.028899248348344704, -0.025692803282924225),
    (-17.51138098246082, 0.0005759263263247724, 1.0648485622888747e-6, -0.032271244024285831),
    (0.2829464667371049, 5.894553652502172e-12, 0.92306215823662017, 0.30276404822259461),
    (-0.00037656851461742667, 6.560035955544309, 0.085037738858718456, -4.7741034673489574e-6),
    (-16.713431210061035, 22.095534409195317, 0.016246144678020998, -0.012272866492783018),
    (-16.600551686412363, 10.761959709547966, 0.015549100311871637, -0.023923489242999355),
    (26.028155613679623, 9.466103064228585e-13, 7.9008458153683842e-16, 0.021692159635430036),
    (-5.74101850038339, 7.741197049329216, 0.047121420344799778, -0.034574339935335561),
    (-26.889567504886426, -1.0155366132001662, -0.00079292871865769752, -0.020966258259123015),
    (7.963348137145449, 6.8358363743275365, 0.035221008174647773, 0.040658643431323402),
    (28.856728707275906, 0.03771718082692616, 2.5600786899922517e-5, 0.019563132080562425),
    (-6.289756200839842, 7.358815515398799, 0.044461052884301617, -0.037600023895388786),
    (-27.150166108563734, 9.328314084711033e-06, 7.1543321970344131e-9, -0.020794460531467983),
    (-2.522327604147363, 1.3169748963739831, 0.1049468644812129, -0.17501741054082414),
    (9.110296649511554, -0.7629171787851379, -0.0052443144196289435, 0.061861392483243729),
    (-0.00058519513338611, 2.853033767266993, 0.18734993180854987, -3.4730024174196278e-5),
    (0.0006440159649243392, 3.459594672188774, 0.15698092711050061, 2.717642800849331e-5),
    (-1.5921569485742602, 9.299574851024582, 0.058650984126529417, -0.0099315986124018213),
    (-0.0006139476251109066, 2.9139908991646646, 0.18379807816896416, -3.5122269732268609e-5),
    (-0.000939435889845161, 3.286414638043227, 0.1646335790212163, -4.346834049057812e-5),
    (0.0005333360046859475, 0.3251958713273799, 0.71760384947319822, 0.00035288462696132821),
    (-4.553706745062634, 7.576896053087891, 0.054717682978607469, -0.032472161668571521),
    (-13.793996533055626, 4.726967069801726e-05, 1.4128080425222129e-7, -0.041009434431165814),
    (-4.487393454103787, -1.9622838406583625, -0.048556725015853597, -0.10624469491926183),
    (24.154657011689125, 3.6201834468935316e-06, 3.5097307331300317e-9, 0.023377451733131974),
    (-0.0009514865901169431, 1.870930082038722, 0.26991105854256226, -0.00011266509761037258),
    (9.135553012154087, 7.539105801012864, 0.030466308132708969, 0.036654839493899932),
    (-4.979063583382375, 2.299380839973707, 0.044848076047807036, -0.093800011928194759),
    (8.56198839791724, -0.17060768539420001, -0.0013402994784873436, 0.066326375395434278),
    (0.00047697602664403273, 6.582042020089026, 0.084759650452313733, 6.0079898963748734e-6),
    (6.220745412232468, 2.6625480097044924e-10, 4.0430435598221733e-12, 0.091915349283009363),
    (-2.7628311836968322, 5.8224862065700425, 0.078817488273796483, -0.036536197729893175),
    (-18.16129249706027, 21.84522713182817, 0.015277532479894479, -0.012685439593724545),
    (-26.116018451953234, -1.8824972592609621, -0.0015525329535871587, -0.021506916177096375),
    (-3.4848329185407785, 7.802557708811332, 0.060140666402802598, -0.026501646345259422),
    (0.0009756476591850079, 2.119130529439543, 0.24324110452864439, 9.5086333309977406e-5),
    (-24.21464528692055, 13.449683857100158, 0.0099034517951380251, -0.017806796779777586),
    (-3.0761400308823, 1.450941938914623e-11, 7.770138499420757e-5, -0.19536850085363522),
    (2.4061529176328396, 4.741086187581219, 0.094262964112850175, 0.046243325344439531),
    (20.125250316297084, 9.326968299914453e-06, 1.3040624364457252e-8, 0.02806865287623631),
    (20.452270788218115, 6.6948108465976865, 0.0081790338860700856, 0.024932405552400726),
    (-2.540579251340553, 5.380674277270961, 0.085382000623470831, -0.039230534898736434),
    (-15.154252416311316, 5.096229797390341, 0.011305442566975168, -0.033486012520549478),
    (23.050069171593286, 16.083264941068396, 0.011498712658091821, 0.016458755880631511),
    (-2.078608087948899, 7.924487266387732, 0.066247502853159163, -0.017126235739253897),
    (-5.372381113523148, 6.084428913931731, 0.052390939977472808, -0.045565915841706716),
    (28.475427762771716, 2.4070642303495026e-13, 1.6779436662177705e-16, 0.019825448591272381),
    (6.382054124938481, 6.405563641212668, 0.044464132241949452, 0.043762693242556661),
    (-0.0009192762691247138, 2.34941972690181, 0.22259568565188167, -7.5782979114464363e-5),
    (8.603474956023184, 1.7223696345589308, 0.012862640350822996, 0.063400927418431939),
    (-0.00010177228446241941, 2.079585777223003, 0.24715338982635555, -1.0220564789770355e-5),
    (25.850720840451807, 2.67935859528754e-13, 2.2671903713086558e-16, 0.021841273656065236),
    (2.398959599390569, 0.1764542190324141, 0.027765040918708786, 0.26057541812062279),
    (-7.172610306118948, 0.0397643744851468, 0.00044944229996062196, -0.079444251461156978),
    (5.965402155620652, 18.50421309590727, 0.027596557590515721, 0.0088731938684736429),
    (-18.261584222176673, 1.639239482579735e-10, 2.7858283604852662e-13, -0.030941418260014765),
    (17.71687008244927, 15.085479527382045, 0.015737885978780754, 0.018448953174745556),
    (-23.916733952234445, 10.044791518992723, 0.0084369574814777308, -0.02005857424537168),
    (2.7836389145250866, -1.0884740164087452, -0.077275245065198527, 0.17867169468203711),
    (11.724353255853146, 10.523034405796814, 0.023979029042391703, 0.026608981200986077),
    (1.330401284053158, 1.5718171607017535, 0.21656769532409661, 0.14965668699103025),
    (7.2849274824056955, 7.966203555630148, 0.038702350605630446, 0.035090598644413549),
    (-6.055968196581139, 5.280316979063558, 0.046596067759961818, -0.052616461831662872),
    (6.407371623886824, 2.062176836862836, 0.026455284950549348, 0.080337674906456664),
    (-7.81875286541212e-05, 1.3003566342577395, 0.35757188630680196, -1.5515315517172622e-5),
    (3.0928713720277514, 18.14200083623418, 0.03018077542030191, 0.0051301717025571112),
    (-0.0008219377760162279, 4.977556760741923, 0.11118545571077869, -1.7684242369674914e-5),
    (0.08926125938976526, -0.5411317387264274, 2.0541947268622827, 0.29956321521623498),
    (1.2695325188869049, 27.54149306725109, 0.020428336251553411, 0.00094041491067406461),
    (-0.5694210140902669, 23.558849276161027, 0.023912672697112256, -0.00057693688216774137),
    (-0.0006053165897486317, 1.0132028363521268, 0.42400307526715698, -0.00016293717625885026),
    (0.0009510931657671724, 3.861891884477494, 0.14161883730254293, 3.2856303866838067e-5),
    (25.57006879286515, 9.800541019795206, 0.0073859309259455776, 0.019244506696158141),
    (0.00024068593514288287, 6.596446030803758, 0.084578601344044116, 3.0188773330990969e-6),
    (17.149534310365112, 4.328477870633839, 0.0078407860746505924, 0.030965680728543629),
    (6.927027582543033, 6.291877021860719, 0.040808802977994816, 0.044417306780393522),
    (-16.91178737206195, 10.191604241521048, 0.014784864309954944, -0.02447077433559477),
    (-2.3284725309598953, -0.7694329657057568, -0.10778390676927617, -0.21995905680791241),
    (13.492961443506061, 26.610735724536013, 0.016863740683798564, 0.0085411646451259947),
    (3.7405961047790868, 21.996221409621565, 0.024906304493037339, 0.004227006663330921),
    (20.292255576343592, 0.8851235051796187, 0.001214855177752268, 0.027783896122486573),
];
